# config.py
import os
from dotenv import load_dotenv
from typing import Dict, Any

# .env dosyasını yükle
load_dotenv()

def get_env(key: str, default: Any = None, type_cast: type = str) -> Any:
    """Tip dönüşümlü çevre değişkeni okuyucu"""
    value = os.getenv(key, default)
    return type_cast(value) if value is not None else None

LOG_PATH: str = get_env('DAHA_LOG_FILE', os.path.join('logs', 'app_log.json'))

# Genel Ayarlar
GENERAL_SETTINGS: Dict[str, Any] = {
    'log_settings': {
        'level': get_env('DAHA_LOG_LEVEL', 'INFO'),
        'log_file': LOG_PATH
    }
}

# Hesaplama Parametreleri
COMPUTE_SETTINGS: Dict[str, Any] = {
    'trunc_order': get_env('DAHA_TRUNC_ORDER', 8, int),
    'max_word_length': get_env('DAHA_MAX_WORD_LENGTH', 14, int),
    'random_seed': get_env('DAHA_RANDOM_SEED', 20240611, int),
    'random_samples': get_env('DAHA_RANDOM_SAMPLES', 20, int),
    'ideal_size': get_env('DAHA_IDEAL_SIZE', 6, int),
    'output_format': get_env('DAHA_OUTPUT_FORMAT', 'pretty'),
    'default_type': get_env('DAHA_DEFAULT_TYPE', 'A1'),
}

# Kök sistemi başına varsayılan tarama ağırlıkları (temel ağırlık koordinatları)
SWEEP_WEIGHTS: Dict[str, list] = {
    'A1': [(0,), (1,), (-1,), (2,), (-2,), (3,)],
    'A2': [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1), (1, -1), (-1, 1)],
    'C1v-C1': [(0,), (1,), (-1,), (2,), (-2,), (3,)],
}

# Geliştirici Uyarısı
if COMPUTE_SETTINGS['output_format'] not in ('pretty', 'json'):
    import logging
    logging.warning("DAHA_OUTPUT_FORMAT geçersiz! 'pretty' veya 'json' olmalı.")
