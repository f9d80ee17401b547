namespace tb {}
