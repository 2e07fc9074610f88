"""Rewrite chat messages into text a speech synthesizer can read naturally."""

from .assets import AssetBundle, AssetError, EmojiRecord, asset_footprint, default_assets, load_assets
from .config import Config, ConfigError, load_config
from .pipeline import InputTooLarge, ProcessedMessage, preprocess, preprocess_with_report

__all__ = [
    "AssetBundle",
    "AssetError",
    "Config",
    "ConfigError",
    "EmojiRecord",
    "InputTooLarge",
    "ProcessedMessage",
    "asset_footprint",
    "default_assets",
    "load_assets",
    "load_config",
    "preprocess",
    "preprocess_with_report",
]

__version__ = "0.1.0"
