#include <cstdio>
int main() { std::puts("thetablock: not yet implemented"); return 2; }
