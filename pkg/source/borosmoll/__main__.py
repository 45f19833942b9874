# :coding: utf-8

import borosmoll.command_line


def main():
    """Execute main command line interface passing command line arguments."""
    borosmoll.command_line.main(prog_name="borosmoll")


if __name__ == "__main__":
    main()
