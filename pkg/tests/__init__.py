"""rvclab tests."""
