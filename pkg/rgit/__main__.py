"""Runs the rgit command line tool."""

import sys

from rgit import cli


sys.exit(cli.main())
