# src/config/settings.py
# CONFIGURACIÓN GLOBAL DE LA BIBLIOTECA DE REDES ELÍPTICAS

import os
from typing import Optional


class Config:
    # ========== CONFIGURACIÓN DE CUERPOS ==========
    DEFAULT_FIELD = "rational"
    INDEX_LIMIT = 2 ** 63 - 1  # coordenadas de índice en 64 bits

    # ========== CONFIGURACIÓN DE PROPAGACIÓN ==========
    # Cota de entradas para la búsqueda genérica de instancias
    DEFAULT_SEARCH_BOUND = 3
    SEARCH_ENABLED = True
    # Tope de nodos visitados antes de declarar la búsqueda agotada
    SEARCH_NODE_LIMIT = 2_000_000

    # ========== CONFIGURACIÓN DE EVALUACIÓN DESDE CURVAS ==========
    # Cota usada al levantar términos base de soporte >= 4
    SEED_LIFT_BOUND = 2

    # ========== CONFIGURACIÓN DE VERIFICACIÓN ==========
    DEFAULT_SAMPLES = 500
    DEFAULT_SEED = 0
    SAMPLE_ATTEMPTS_FACTOR = 200

    # ========== CONFIGURACIÓN DE SALIDA ==========
    GRID_ORIGIN_MARK = "*"
    GRID_COLUMN_GAP = 2
    JSON_INDENT = 2

    # ========== CONFIGURACIÓN DE LOGGING ==========
    LOG_LEVEL = "WARNING"
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    LOG_FILE: Optional[str] = None

    # ========== MODOS DE OPERACIÓN ==========
    MODES = {
        'STRICT': {  # solo los esquemas explícitos
            'search_enabled': False,
            'search_bound': 0,
            'seed_lift_bound': 2,
        },
        'BALANCED': {  # Modo recomendado
            'search_enabled': True,
            'search_bound': 3,
            'seed_lift_bound': 2,
        },
        'EXHAUSTIVE': {
            'search_enabled': True,
            'search_bound': 4,
            'seed_lift_bound': 3,
        }
    }

    # Modo activo por defecto
    ACTIVE_MODE = 'BALANCED'

    @classmethod
    def set_mode(cls, mode_name: str) -> bool:
        """Cambia el modo de operación"""
        if mode_name in cls.MODES:
            mode_config = cls.MODES[mode_name]
            cls.SEARCH_ENABLED = mode_config['search_enabled']
            cls.DEFAULT_SEARCH_BOUND = mode_config['search_bound']
            cls.SEED_LIFT_BOUND = mode_config['seed_lift_bound']
            cls.ACTIVE_MODE = mode_name
            return True
        return False

    @classmethod
    def get_current_mode(cls) -> str:
        """Obtiene el modo activo actual"""
        return cls.ACTIVE_MODE

    @classmethod
    def load_environment(cls):
        """Aplica las variables de entorno ELLNET_*"""
        level = os.environ.get('ELLNET_LOG_LEVEL')
        if level:
            cls.LOG_LEVEL = level.upper()
        log_file = os.environ.get('ELLNET_LOG_FILE')
        if log_file:
            cls.LOG_FILE = log_file
        mode = os.environ.get('ELLNET_MODE')
        if mode:
            cls.set_mode(mode.upper())

    @classmethod
    def resolve_seed(cls, cli_value: Optional[int] = None) -> int:
        """Semilla del generador: entorno, luego bandera, luego valor por defecto"""
        env_value = os.environ.get('ELLNET_SEED')
        if env_value is not None and env_value.strip():
            return int(env_value)
        if cli_value is not None:
            return cli_value
        return cls.DEFAULT_SEED
