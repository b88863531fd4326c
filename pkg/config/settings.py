"""
Configuracion del banco de trabajo de dominios valuados en quantales
"""
import os
import sys
from pathlib import Path
from dataclasses import dataclass, field
from dotenv import load_dotenv


def get_base_dir() -> Path:
    """
    Obtener directorio base del proyecto.
    Detecta si esta corriendo como ejecutable PyInstaller o como script Python.
    """
    if getattr(sys, 'frozen', False):
        return Path(sys.executable).parent
    else:
        return Path(__file__).resolve().parent.parent


# Directorio base del proyecto
BASE_DIR = get_base_dir()

# Cargar variables de entorno desde el directorio base
load_dotenv(BASE_DIR / '.env')

# Si existe .env.local, sobreescribir con config local
_env_local = BASE_DIR / '.env.local'
if _env_local.exists():
    load_dotenv(_env_local, override=True)


@dataclass
class Settings:
    """Configuracion principal del banco de trabajo"""

    # Rutas de datos
    fixtures_dir: Path = field(default_factory=lambda: BASE_DIR / "data" / "fixtures")
    output_dir: Path = field(default_factory=lambda: BASE_DIR / "data" / "reportes")
    workspace_dir: Path = field(default_factory=lambda: BASE_DIR / "data" / "workspace")
    logs_dir: Path = field(default_factory=lambda: BASE_DIR / "logs")

    # Topes de enumeracion (|L|^|X| y pares de L-subconjuntos)
    cap_enumeracion: int = 1_000_000
    cap_pares: int = 1_000_000
    max_quantale: int = 16       # |L| maximo aceptado al construir
    max_iso: int = 8             # |carrier| maximo para buscar isomorfismos
    max_dot: int = 64            # |carrier| maximo para exportar DOT
    max_tabla_reporte: int = 6   # tablas ⇓ completas en reportes hasta este tamano

    # Suites y generadores
    semilla: int = 42
    workers: int = 1
    presupuesto_suite: int = 100_000
    instancias_suite: int = 30
    intentos_generador: int = 200
    muestras_gc1: int = 40       # pares (A, B) muestreados para GC1 en operadores por puntos
    muestras_leyes: int = 64     # subconjuntos muestreados para Q6/Q7 cuando |L| > 4

    # Configuracion de logging
    log_level: str = "INFO"
    log_format: str = "{time:HH:mm:ss.SSS} | {level: <7} | {name}:{function} | {message}"
    log_rotacion: str = "5 MB"
    log_retencion: str = "14 days"

    def __post_init__(self):
        """Crear directorios si no existen"""
        for dir_path in [self.output_dir, self.workspace_dir, self.logs_dir]:
            dir_path.mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_env(cls) -> 'Settings':
        """Crear configuracion desde variables de entorno"""
        return cls(
            cap_enumeracion=int(os.getenv('WB_CAP_ENUMERACION', '1000000')),
            cap_pares=int(os.getenv('WB_CAP_PARES', '1000000')),
            max_quantale=int(os.getenv('WB_MAX_QUANTALE', '16')),
            max_iso=int(os.getenv('WB_MAX_ISO', '8')),
            max_dot=int(os.getenv('WB_MAX_DOT', '64')),
            max_tabla_reporte=int(os.getenv('WB_MAX_TABLA_REPORTE', '6')),
            semilla=int(os.getenv('WB_SEMILLA', '42')),
            workers=int(os.getenv('WB_WORKERS', '1')),
            presupuesto_suite=int(os.getenv('WB_PRESUPUESTO', '100000')),
            instancias_suite=int(os.getenv('WB_INSTANCIAS', '30')),
            intentos_generador=int(os.getenv('WB_INTENTOS_GENERADOR', '200')),
            muestras_gc1=int(os.getenv('WB_MUESTRAS_GC1', '40')),
            muestras_leyes=int(os.getenv('WB_MUESTRAS_LEYES', '64')),
            log_level=os.getenv('LOG_LEVEL', 'INFO'),
            log_rotacion=os.getenv('WB_LOG_ROTACION', '5 MB'),
            log_retencion=os.getenv('WB_LOG_RETENCION', '14 days'),
        )


# Instancia global de configuracion
settings = Settings.from_env()
