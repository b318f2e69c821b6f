from .settings import Settings, get_current_settings, get_settings, set_current_settings

__all__ = ["Settings", "get_current_settings", "get_settings", "set_current_settings"]
