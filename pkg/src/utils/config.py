"""
Configuration Management Module for the Blowup Drawing Lab
Handles search budgets, export settings, environment overrides, and configuration persistence
"""

import json
import os
import logging
from typing import Dict, Any, Optional
from dataclasses import dataclass, asdict, field

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

load_dotenv()

CONFIG_ENV_VAR = "GRAPHLAB_CONFIG"
LOG_LEVEL_ENV_VAR = "GRAPHLAB_LOG_LEVEL"


@dataclass
class SearchConfig:
    """Budgets for the exact decomposition searches"""
    node_budget: int = 2_000_000
    time_limit_seconds: Optional[float] = None
    forest_greedy_first: bool = True


@dataclass
class DeciderConfig:
    """Budgets for the thickness and split-thickness deciders"""
    biplanar_node_budget: int = 5_000_000
    split2_node_budget: int = 1_000_000
    time_limit_seconds: Optional[float] = None
    slow_tests_env_var: str = "GRAPHLAB_SLOW_TESTS"


@dataclass
class ExportConfig:
    """SVG export configuration"""
    plane_width_inches: float = 6.0
    plane_height_inches: float = 6.0
    vertex_size: float = 18.0
    edge_width: float = 0.8
    show_labels: bool = True
    palette: str = "deep"
    hash_salt: str = "graphlab"
    outer_radius: float = 1.0


@dataclass
class PerformanceConfig:
    """Performance configuration"""
    max_workers: int = 1
    split_depth: int = 4


@dataclass
class ApplicationConfig:
    """Main application configuration container"""
    search: SearchConfig = field(default_factory=SearchConfig)
    deciders: DeciderConfig = field(default_factory=DeciderConfig)
    export: ExportConfig = field(default_factory=ExportConfig)
    performance: PerformanceConfig = field(default_factory=PerformanceConfig)

    # Application metadata
    app_name: str = "Blowup Drawing Lab"
    app_version: str = "1.0.0"
    format_version: int = 1
    log_level: str = "INFO"

    # Path configurations
    base_dir: str = field(default_factory=lambda: os.path.dirname(os.path.dirname(os.path.dirname(__file__))))
    output_dir: str = "output/"
    logs_dir: str = "logs/"

    def __post_init__(self):
        """Initialize paths relative to base directory"""
        self.base_dir = os.path.abspath(self.base_dir)
        self.output_dir = os.path.join(self.base_dir, self.output_dir)
        self.logs_dir = os.path.join(self.base_dir, self.logs_dir)

        env_level = os.getenv(LOG_LEVEL_ENV_VAR)
        if env_level:
            self.log_level = env_level.upper()


class ConfigManager:
    """
    Configuration manager for loading, saving, and managing lab settings
    """

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize configuration manager

        Args:
            config_file: Configuration file name (supports .json, .yaml, .yml);
                defaults to $GRAPHLAB_CONFIG or config.json
        """
        self.base_dir = os.path.dirname(os.path.dirname(os.path.dirname(__file__)))
        config_file = config_file or os.getenv(CONFIG_ENV_VAR, "config.json")
        self.config_file = config_file if os.path.isabs(config_file) else os.path.join(self.base_dir, config_file)
        self.config: Optional[ApplicationConfig] = None

        self.load_config()

    def _config_to_dict(self, config: ApplicationConfig) -> Dict[str, Any]:
        """Convert config object to dictionary"""
        config_dict = asdict(config)

        # Paths are stored relative to base_dir
        del config_dict['base_dir']
        config_dict['output_dir'] = os.path.relpath(config.output_dir, config.base_dir) + "/"
        config_dict['logs_dir'] = os.path.relpath(config.logs_dir, config.base_dir) + "/"

        return config_dict

    def _dict_to_config(self, config_dict: Dict[str, Any]) -> ApplicationConfig:
        """Convert dictionary to config object"""
        return ApplicationConfig(
            search=SearchConfig(**config_dict.get('search', {})),
            deciders=DeciderConfig(**config_dict.get('deciders', {})),
            export=ExportConfig(**config_dict.get('export', {})),
            performance=PerformanceConfig(**config_dict.get('performance', {})),
            app_name=config_dict.get('app_name', 'Blowup Drawing Lab'),
            app_version=config_dict.get('app_version', '1.0.0'),
            format_version=config_dict.get('format_version', 1),
            log_level=config_dict.get('log_level', 'INFO'),
            output_dir=config_dict.get('output_dir', 'output/'),
            logs_dir=config_dict.get('logs_dir', 'logs/'),
        )

    def load_config(self) -> ApplicationConfig:
        """
        Load configuration from file or fall back to defaults

        Returns:
            ApplicationConfig: Loaded configuration
        """
        try:
            if os.path.exists(self.config_file):
                if self.config_file.endswith(('.yaml', '.yml')):
                    with open(self.config_file, 'r', encoding='utf-8') as f:
                        config_dict = yaml.safe_load(f) or {}
                else:
                    with open(self.config_file, 'r', encoding='utf-8') as f:
                        config_dict = json.load(f)

                self.config = self._dict_to_config(config_dict)
                logger.debug(f"Configuration loaded from {self.config_file}")
            else:
                self.config = ApplicationConfig()
                logger.debug(f"No configuration at {self.config_file}, using defaults")

        except Exception as e:
            logger.error(f"Error loading configuration: {e}")
            self.config = ApplicationConfig()

        return self.config

    def save_config(self, config: Optional[ApplicationConfig] = None, path: Optional[str] = None) -> bool:
        """
        Save configuration to file

        Args:
            config: Configuration to save (uses current if None)
            path: Target file (uses the managed config file if None)

        Returns:
            bool: True if successful
        """
        try:
            if config is None:
                config = self.config
            target = path or self.config_file

            config_dict = self._config_to_dict(config)

            if target.endswith(('.yaml', '.yml')):
                with open(target, 'w', encoding='utf-8') as f:
                    yaml.dump(config_dict, f, default_flow_style=False, indent=2)
            else:
                with open(target, 'w', encoding='utf-8') as f:
                    json.dump(config_dict, f, indent=4, ensure_ascii=False)

            logger.info(f"Configuration saved to {target}")
            return True

        except Exception as e:
            logger.error(f"Error saving configuration: {e}")
            return False

    def get_config(self) -> ApplicationConfig:
        """Get current configuration"""
        if self.config is None:
            self.load_config()
        return self.config

    def update_config(self, section: str, key: str, value: Any, persist: bool = False) -> bool:
        """
        Update a specific configuration value

        Args:
            section: Configuration section (e.g., 'search', 'export')
            key: Configuration key
            value: New value
            persist: Write the updated configuration back to disk

        Returns:
            bool: True if successful
        """
        try:
            config_dict = self._config_to_dict(self.config)

            if section not in config_dict or not isinstance(config_dict[section], dict):
                logger.error(f"Section '{section}' not found in configuration")
                return False
            if key not in config_dict[section]:
                logger.error(f"Key '{key}' not found in section '{section}'")
                return False

            config_dict[section][key] = value
            self.config = self._dict_to_config(config_dict)
            if persist:
                self.save_config()
            logger.info(f"Updated config: {section}.{key} = {value}")
            return True

        except Exception as e:
            logger.error(f"Error updating configuration: {e}")
            return False

    def reset_to_defaults(self) -> bool:
        """Reset configuration to defaults (in memory)"""
        self.config = ApplicationConfig()
        logger.info("Configuration reset to defaults")
        return True


# Global configuration instance
_config_manager: Optional[ConfigManager] = None


def get_config_manager() -> ConfigManager:
    """
    Get or create global configuration manager

    Returns:
        ConfigManager: Global configuration manager instance
    """
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager


def get_config() -> ApplicationConfig:
    """
    Get current application configuration

    Returns:
        ApplicationConfig: Current configuration
    """
    return get_config_manager().get_config()


def load_config(config_file: Optional[str] = None) -> ApplicationConfig:
    """
    Load configuration, optionally from an explicit file

    Args:
        config_file: Path to a JSON or YAML configuration file

    Returns:
        ApplicationConfig: Loaded configuration
    """
    global _config_manager
    if config_file is not None:
        _config_manager = ConfigManager(config_file)
        return _config_manager.get_config()
    return get_config_manager().load_config()


def update_config(section: str, key: str, value: Any) -> bool:
    """Update a specific configuration value in memory"""
    return get_config_manager().update_config(section, key, value)


def validate_config(config: Optional[ApplicationConfig] = None) -> Dict[str, Any]:
    """
    Validate a configuration

    Args:
        config: Configuration to check (uses the current one if None)

    Returns:
        Dict[str, Any]: Validation results with issues
    """
    config = config or get_config()
    issues = {}

    if config.search.node_budget <= 0:
        issues['search'] = "node_budget must be positive"
    if config.deciders.biplanar_node_budget <= 0 or config.deciders.split2_node_budget <= 0:
        issues['deciders'] = "decider budgets must be positive"
    if config.performance.max_workers < 1:
        issues['performance'] = "max_workers must be at least 1"
    if config.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        issues['log_level'] = f"Unknown log level: {config.log_level}"

    return issues


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Configure root logging for command-line use

    Args:
        level: Log level name (uses the configured level if None)
        log_file: Optional file to log into as well as stderr; relative names go under
            the configured logs directory
    """
    level = (level or get_config().log_level).upper()
    handlers = [logging.StreamHandler()]
    if log_file:
        if not os.path.isabs(log_file):
            log_file = os.path.join(get_config().logs_dir, log_file)
        os.makedirs(os.path.dirname(os.path.abspath(log_file)), exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


# Convenience functions for common configuration access
def get_search_config() -> SearchConfig:
    """Get search configuration"""
    return get_config().search


def get_decider_config() -> DeciderConfig:
    """Get decider configuration"""
    return get_config().deciders


def get_export_config() -> ExportConfig:
    """Get export configuration"""
    return get_config().export


def get_performance_config() -> PerformanceConfig:
    """Get performance configuration"""
    return get_config().performance
