"""Entry point for ``python -m cdslab``."""

from .cli import main

if __name__ == "__main__":
    main()
