# Configuracion del banco de trabajo de dominios valuados en quantales
from .settings import Settings, settings, BASE_DIR

__all__ = ['Settings', 'settings', 'BASE_DIR']
