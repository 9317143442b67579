"""Text presentations and the command line."""
