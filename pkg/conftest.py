import os
import sys

# Make the girthroot package importable from a plain checkout
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))
