import os
import sys

# Flat-module layout: make the repository root importable, like dev.sh does
# with sys.path.append('.').
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from hypothesis import settings

settings.register_profile('ci', max_examples=50, deadline=None)
settings.register_profile('deep', max_examples=500, deadline=None)
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'ci'))
