#include <pybind11/pybind11.h>

PYBIND11_MODULE(_tbcore, m) {
  m.doc() = "exact theta block engine (placeholder)";
}
