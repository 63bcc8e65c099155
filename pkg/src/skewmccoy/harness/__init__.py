"""Campaign configuration, orchestration, reporting and the command line."""

from .config import CampaignConfig, catalog_generate, load_config, parse_config
from .campaign import dumps, exit_code, run_campaign, summarize, write_report

__all__ = ["CampaignConfig", "catalog_generate", "load_config", "parse_config",
           "dumps", "exit_code", "run_campaign", "summarize", "write_report"]
