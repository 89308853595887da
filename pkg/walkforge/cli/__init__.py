"""walkforge command-line interface."""
