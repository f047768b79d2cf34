"""
Run the sxq query tool from a source checkout

Usage is the same as "python -m sxq", see sxq/__main__.py.
"""
import os
import sys
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
from sxq.__main__ import main

if __name__ == "__main__":
    sys.exit(main())
