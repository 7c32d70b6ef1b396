"""genext: entry point."""

import sys


def main() -> int:
    """Run the genext command line."""
    from src.genext.cli.app import main as cli_main

    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
