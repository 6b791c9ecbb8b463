"""
責務:
- プロジェクトの実行起点（millscale CLI）。
- サブコマンド: sequence / constant / verify / lemma-check / bench
"""

import sys
import os

project_dir = os.path.dirname(os.path.abspath(__file__))
if project_dir not in sys.path:
    sys.path.insert(0, project_dir)

from utils.main_utils import main

if __name__ == "__main__":
    sys.exit(main())
