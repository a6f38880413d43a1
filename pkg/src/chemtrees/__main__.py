"""Entry point for ``python -m chemtrees``."""

from .cli import main

main()
