# src/config.py

"""
Configuration module for the Ramsey verification engine.
Contains default settings and configuration loading utilities.
"""

import os
import json
import logging
from dataclasses import dataclass, field, asdict

logger = logging.getLogger(__name__)

__version__ = "1.0.0"

CERT_SCHEMA = "ramsey-cert/1"
THREADS_ENV = "RAMSEY_THREADS"


@dataclass
class HostLimits:
    """Caps on host size; everything bigger is refused."""
    max_vertices: int = 64
    max_host_edges: int = 4096


@dataclass
class SearchConfig:
    """Configuration for the exhaustive good-coloring search."""
    node_budget: int = 50_000_000     # total over all parallel tasks
    time_budget: float = 600.0
    symmetry: str = "none"            # "none" | "lex_leader"
    dominance: bool = False
    edge_order: str = "degree_guided"   # "degree_guided" | "natural"
    symmetry_cap: int = 4096
    workers: int = 1
    split_depth: int = 6

    def __post_init__(self):
        if self.node_budget <= 0 or self.time_budget <= 0:
            raise ValueError("search budgets must be positive")
        if self.symmetry not in ("none", "lex_leader"):
            raise ValueError(f"unknown symmetry mode: {self.symmetry!r}")
        if self.edge_order not in ("natural", "degree_guided"):
            raise ValueError(f"unknown edge order: {self.edge_order!r}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass
class CertifyConfig:
    """Search settings used when certifying an upper bound."""
    search: SearchConfig = field(default_factory=lambda: SearchConfig(
        time_budget=60.0,
        symmetry="lex_leader",
        dominance=True,
        edge_order="degree_guided",
    ))
    desk_max_host_edges: int = 96


@dataclass
class CnfConfig:
    """Configuration for DIMACS export."""
    clause_cap: int = 5_000_000


@dataclass
class OutputConfig:
    """Configuration for output settings."""
    output_directory: str = None

    def get_output_dir(self):
        """Get the output directory, creating it if necessary."""
        if self.output_directory:
            directory = self.output_directory
        else:
            # Default to project's assets/certificates directory
            project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
            directory = os.path.join(project_root, "assets", "certificates")

        os.makedirs(directory, exist_ok=True)
        return directory


def threads_from_env(default=1):
    """Worker count from RAMSEY_THREADS, or `default` when unset or invalid."""
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring non-integer %s=%r", THREADS_ENV, raw)
        return default
    return max(1, value)


@dataclass
class AppConfig:
    """Main application configuration."""
    limits: HostLimits = field(default_factory=HostLimits)
    search: SearchConfig = field(default_factory=SearchConfig)
    certify: CertifyConfig = field(default_factory=CertifyConfig)
    cnf: CnfConfig = field(default_factory=CnfConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def from_file(cls, config_path):
        """Load configuration from a JSON file."""
        try:
            with open(config_path, 'r') as f:
                config_data = json.load(f)

            certify_data = dict(config_data.get('certify', {}))
            certify_search = SearchConfig(**certify_data.pop('search', {})) \
                if 'search' in certify_data else CertifyConfig().search

            return cls(
                limits=HostLimits(**config_data.get('limits', {})),
                search=SearchConfig(**config_data.get('search', {})),
                certify=CertifyConfig(search=certify_search, **certify_data),
                cnf=CnfConfig(**config_data.get('cnf', {})),
                output=OutputConfig(**config_data.get('output', {})),
            )
        except (FileNotFoundError, json.JSONDecodeError, TypeError, ValueError) as e:
            logger.warning("Error loading config %s: %s; using defaults", config_path, e)
            return cls()  # Return default config

    @classmethod
    def load(cls, config_path=None):
        """Defaults or file contents, with RAMSEY_THREADS applied on top."""
        config = cls.from_file(config_path) if config_path else cls()
        workers = threads_from_env(config.search.workers)
        config.search.workers = workers
        config.certify.search.workers = workers
        return config

    def save_to_file(self, config_path):
        """Save configuration to a JSON file."""
        try:
            with open(config_path, 'w') as f:
                json.dump(asdict(self), f, indent=2)
            return True
        except OSError as e:
            logger.error("Error saving config: %s", e)
            return False
