#!/usr/bin/env python
import logging
import os
import sys

from dotenv import load_dotenv

# Configure logging; stdout carries JSON/CSV output
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler(sys.stderr)
    ]
)

# Load environment variables
load_dotenv()

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
