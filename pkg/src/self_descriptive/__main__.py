"""
Runs the command line interface via ``python -m self_descriptive``.

"""

from .cli import main

if __name__ == "__main__":
    main()
