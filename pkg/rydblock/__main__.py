#!/usr/bin/env python3
"""CLI entry point for rydblock."""

from rydblock.cli import app

if __name__ == "__main__":
    app()
