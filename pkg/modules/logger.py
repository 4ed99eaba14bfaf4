# modules/logger.py
import logging
import json
import os
from datetime import datetime
import threading
from typing import Dict, Optional

from config import GENERAL_SETTINGS, LOG_PATH


class Logger:
    """
    Hesaplama modülleri için JSON formatında, iş parçacığı güvenli loglama sağlayan sınıf.
    """
    def __init__(self, log_file: str = LOG_PATH, level: Optional[str] = None):
        self.log_file = log_file
        self.lock = threading.Lock()  # Eşzamanlı yazımlar için kilit
        self.logger = logging.getLogger('MacdonaldLogger')
        level_name = (level or GENERAL_SETTINGS['log_settings']['level']).upper()
        self.logger.setLevel(getattr(logging, level_name, logging.INFO))
        self.logger.propagate = False

        self._setup_logger()

    def _setup_logger(self):
        # Handler'lar yalnızca bir kez eklenir
        if not self.logger.handlers:
            log_dir = os.path.dirname(self.log_file)
            if log_dir:
                os.makedirs(log_dir, exist_ok=True)

            file_handler = logging.FileHandler(self.log_file)
            file_handler.setFormatter(JSONFormatter())
            self.logger.addHandler(file_handler)

            # Konsola yalnızca uyarı ve üstü
            stream_handler = logging.StreamHandler()
            stream_handler.setLevel(logging.WARNING)
            stream_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
            self.logger.addHandler(stream_handler)

    def log(self, level: str, message: str, module: str, extra: Optional[Dict] = None) -> None:
        """
        JSON log kaydı oluşturur.

        Args:
            level (str): Log seviyesi ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL').
            message (str): Log mesajı.
            module (str): Kaydı üreten modül etiketi (örn: 'HECKE', 'WEIGHTS').
            extra (Optional[Dict]): Kayda eklenecek ek alanlar (tip adı, λ, N ...).
        """
        # Standart 'module' niteliğiyle çakışmasın diye özel anahtar
        log_record_extra = {'custom_module_name': module}

        if extra:
            log_record_extra.update({k: _jsonable(v) for k, v in extra.items()})

        with self.lock:
            try:
                self.logger.log(getattr(logging, level.upper()), message, extra=log_record_extra)
            except Exception as e:
                print(f"Logging failed: {str(e)}")

    def debug(self, message: str, module: str, extra: Optional[Dict] = None) -> None:
        self.log('DEBUG', message, module, extra)

    def info(self, message: str, module: str, extra: Optional[Dict] = None) -> None:
        self.log('INFO', message, module, extra)

    def warning(self, message: str, module: str, extra: Optional[Dict] = None) -> None:
        self.log('WARNING', message, module, extra)

    def error(self, message: str, module: str, extra: Optional[Dict] = None) -> None:
        self.log('ERROR', message, module, extra)

    def critical(self, message: str, module: str, extra: Optional[Dict] = None) -> None:
        self.log('CRITICAL', message, module, extra)

    def shutdown(self):
        """
        Handler'ları boşaltır ve kapatır; program çıkışında çağrılır.
        """
        for handler in self.logger.handlers[:]:
            handler.flush()
            handler.close()
            self.logger.removeHandler(handler)
        self.logger.handlers = []


def _jsonable(value):
    # Kesirler, demetler ve tam sayı dizileri JSON'a metin/liste olarak girer
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


class JSONFormatter(logging.Formatter):
    """
    Log kayıtlarını tek satırlık JSON nesnelerine dönüştüren formatlayıcı.
    """
    _STANDARD_KEYS = frozenset([
        'name', 'levelname', 'levelno', 'pathname', 'filename', 'lineno', 'funcName', 'created',
        'asctime', 'msecs', 'relativeCreated', 'thread', 'threadName', 'processName', 'process',
        'exc_info', 'exc_text', 'stack_info', 'msg', 'args', 'module', 'custom_module_name',
        'taskName',
    ])

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            'timestamp': datetime.fromtimestamp(record.created).isoformat(),
            'level': record.levelname,
            'module': getattr(record, 'custom_module_name', record.module),
            'message': record.getMessage(),
        }

        # 'extra' ile gelen özel alanlar
        for key, value in record.__dict__.items():
            if key not in self._STANDARD_KEYS and not key.startswith('_'):
                log_data[key] = value

        return json.dumps(log_data, ensure_ascii=False)
