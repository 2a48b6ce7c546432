"""Configuration save/load and ASD policy resolution."""

import json
import logging
import os

from constructions.policy import AsdPolicy
from utils.constants import CONFIG_DIR, DEFAULT_CONFIG_FILE, DEFAULT_POLICY, POLICY_ENV_VAR

logger = logging.getLogger(__name__)


class ConfigManager:
    """Manages the JSON configuration files of the CLI."""

    def __init__(self, config_dir=CONFIG_DIR):
        self.config_dir = str(config_dir)
        os.makedirs(self.config_dir, exist_ok=True)

    def save_config(self, config_data, filename=None):
        """Save configuration to a JSON file.

        Args:
            config_data: Dictionary with configuration
            filename: Output filename (optional)

        Returns:
            Path to saved config file
        """
        if filename is None:
            filename = DEFAULT_CONFIG_FILE

        filepath = os.path.join(self.config_dir, filename)
        with open(filepath, "w") as f:
            json.dump(config_data, f, indent=2)
        return filepath

    def load_config(self, filename=None):
        """Load configuration from a JSON file.

        Returns:
            Dictionary with configuration, or None if the file doesn't exist
        """
        if filename is None:
            filename = DEFAULT_CONFIG_FILE

        filepath = os.path.join(self.config_dir, filename)
        if not os.path.exists(filepath):
            return None

        with open(filepath, "r") as f:
            return json.load(f)

    def list_configs(self):
        return sorted(f for f in os.listdir(self.config_dir) if f.endswith(".json"))

    def resolve_policy(self, cli_value=None, environ=None):
        """Pick the ASD policy.

        Precedence: CLI flag, then the CHERNFORGE_POLICY environment
        variable, then "policy" in the default config file, then "known".

        Raises:
            ValueError: unknown policy name
        """
        if environ is None:
            environ = os.environ

        if cli_value:
            source, value = "command line", cli_value
        elif environ.get(POLICY_ENV_VAR):
            source, value = POLICY_ENV_VAR, environ[POLICY_ENV_VAR]
        else:
            config = self.load_config() or {}
            if config.get("policy"):
                source, value = DEFAULT_CONFIG_FILE, config["policy"]
            else:
                source, value = "default", DEFAULT_POLICY

        policy = AsdPolicy.parse(value)
        logger.debug("ASD policy %s (from %s)", policy.value, source)
        return policy

    @staticmethod
    def create_config_dict(policy):
        """Configuration dictionary for a policy."""
        return {"policy": AsdPolicy.parse(policy).value if isinstance(policy, str) else policy.value}
