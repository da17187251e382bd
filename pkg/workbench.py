"""
Workbench - Main Entry Point

    python workbench.py ordinal fundseq eps0 3
    python workbench.py gen-ti 3 --out p.hpf
    python workbench.py check-proof p.hpf --theory pa-o

See `python workbench.py --help` for every command.
"""

import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from scripts.workbench import main

if __name__ == '__main__':
    sys.exit(main())
