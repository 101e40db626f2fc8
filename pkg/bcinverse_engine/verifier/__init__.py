"""Per-result verification suites, the sweep runner and the cross-backend check."""
