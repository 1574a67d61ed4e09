import sys
import os

# Add src directory to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from cli_io.cli import main

if __name__ == "__main__":
    sys.exit(main())
