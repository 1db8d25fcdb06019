"""
Allows ``python -m morphPairs``.
"""
import sys

from .cli import main

sys.exit(main())
