# Ensure the ehrhart_mckay package is discoverable
import sys
import os
# Add project root to path if necessary (e.g., running from a checkout)
project_root = os.path.dirname(os.path.abspath(__file__))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

# Import necessary modules only after potentially modifying path
try:
    from ehrhart_mckay.interfaces.cli import main
    from ehrhart_mckay.utils.logger import log
except ImportError as e:
    print(f"Error importing ehrhart_mckay modules: {e}", file=sys.stderr)
    print("Install the requirements (pip install -r requirements.txt) and run from the project directory.", file=sys.stderr)
    sys.exit(3)


if __name__ == "__main__":
    log("Main", f"Starting with arguments {sys.argv[1:]}", level="DEBUG")
    sys.exit(main())
