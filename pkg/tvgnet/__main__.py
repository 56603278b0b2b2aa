"""Allow tvgnet to be executable as a module with python -m tvgnet."""

from .cli import main

if __name__ == "__main__":
    main()
