"""
Argument validation for the CLI
"""
