"""
CLI subcommands - one module per subcommand, each exposing register(subparsers).
"""
from src.commands import analyze, enumeration, glue, render, verify

__all__ = ["analyze", "enumeration", "glue", "render", "verify"]
