"""
Configuration - JSON-backed settings with dotted-key access and debug output
"""

import copy
import json
import os
import sys
from datetime import datetime

CONFIG_FILE = os.environ.get(
    'GRIDCOUNT_CONFIG',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'config.json'))

DEFAULTS = {
    'debug': False,
    'jobs': 1,
    'tables': {
        'cap': 64,
    },
    'oracle': {
        'max_cells':   12,
        'hard_cap':    15,
        'chunk_depth': 4,
    },
    'table': {
        'max_cells': 30,
    },
    'verify': {
        'max_cells': 10,
    },
    'series': {
        'max_coefficients': 5000,
    },
}


def _merge(base, updates):
    for key, value in updates.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


class Config:
    def __init__(self, config_file=CONFIG_FILE):
        self.config_file = config_file
        self.config = copy.deepcopy(DEFAULTS)
        self.load()

    def load(self):
        if not os.path.exists(self.config_file):
            return
        try:
            with open(self.config_file, 'r') as f:
                _merge(self.config, json.load(f))
        except Exception as e:
            # Defaults stay in force.
            print(f'WARNING: could not read {self.config_file}: {e}', file=sys.stderr)

    # ── Access ────────────────────────────────────────────────
    def get(self, key, default=None):
        node = self.config
        for part in key.split('.'):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def set(self, key, value):
        """In-memory override; the settings file is never written."""
        parts = key.split('.')
        node = self.config
        for part in parts[:-1]:
            node = node.setdefault(part, {})
        node[parts[-1]] = value


config = Config()


def debug_enabled():
    return bool(config.get('debug', False)) or os.environ.get('GRIDCOUNT_DEBUG') == '1'


def debug_print(msg):
    if debug_enabled():
        ts = datetime.now().strftime('%H:%M:%S')
        print(f'[{ts}] {msg}', file=sys.stderr, flush=True)
