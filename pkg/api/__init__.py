"""Models shared across the package boundary and the CLI command handlers."""
