"""
配置文件 - 管理穷举预算、扫描分块、探测参数、日志和路径等配置信息
"""
import os
import json
import logging
from pathlib import Path
from typing import Dict, Any, Optional
from dataclasses import dataclass, field
from pydantic import BaseModel, field_validator
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# 项目根目录
PROJECT_ROOT = Path(__file__).parent.parent

# 数据目录
DATA_DIR = PROJECT_ROOT / "data"
EXAMPLES_DIR = DATA_DIR / "examples"
SETTINGS_FILE = DATA_DIR / "settings.json"

# 计算参数
ENUMERATION_BUDGET = 10_000_000  # Z_m^n 穷举上限
SCAN_CHUNK_SIZE = 65536  # numpy 分块扫描的行数
PROBE_TRIALS = 200  # 探测默认采样次数
PROBE_SEED = 0

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

class Settings(BaseModel):
    """系统设置"""
    enumeration_budget: int = ENUMERATION_BUDGET
    scan_chunk_size: int = SCAN_CHUNK_SIZE
    probe_trials: int = PROBE_TRIALS
    probe_seed: int = PROBE_SEED
    log_level: str = "INFO"
    log_file: Optional[str] = None

    def __init__(self, **data):
        # 从环境变量读取配置
        env_mappings = {
            'enumeration_budget': 'POMSET_ENUMERATION_BUDGET',
            'scan_chunk_size': 'POMSET_SCAN_CHUNK_SIZE',
            'probe_trials': 'POMSET_PROBE_TRIALS',
            'probe_seed': 'POMSET_PROBE_SEED',
            'log_level': 'POMSET_LOG_LEVEL',
            'log_file': 'POMSET_LOG_FILE'
        }

        for field_name, env_var in env_mappings.items():
            if field_name not in data and os.getenv(env_var):
                env_value = os.getenv(env_var)
                if env_value is not None:
                    # 类型转换
                    if field_name in ('enumeration_budget', 'scan_chunk_size', 'probe_trials', 'probe_seed'):
                        data[field_name] = int(env_value)
                    else:
                        data[field_name] = env_value

        super().__init__(**data)

    @field_validator('enumeration_budget')
    @classmethod
    def validate_enumeration_budget(cls, v):
        if v <= 0:
            raise ValueError('穷举预算必须大于0')
        return v

    @field_validator('scan_chunk_size')
    @classmethod
    def validate_scan_chunk_size(cls, v):
        if v <= 0:
            raise ValueError('扫描分块大小必须大于0')
        return v

    @field_validator('probe_trials')
    @classmethod
    def validate_probe_trials(cls, v):
        if v < 0:
            raise ValueError('探测次数不能为负数')
        return v

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        v = v.upper()
        if v not in LOG_LEVELS:
            raise ValueError(f'日志级别必须是 {", ".join(LOG_LEVELS)} 之一')
        return v

@dataclass
class ComputationConfig:
    """计算配置"""
    enumeration_budget: int = ENUMERATION_BUDGET
    scan_chunk_size: int = SCAN_CHUNK_SIZE

@dataclass
class ProbeConfig:
    """探测配置"""
    trials: int = PROBE_TRIALS
    seed: int = PROBE_SEED

@dataclass
class PathConfig:
    """路径配置"""
    project_root: Path = field(default_factory=lambda: PROJECT_ROOT)
    data_dir: Path = field(default_factory=lambda: DATA_DIR)
    examples_dir: Path = field(default_factory=lambda: EXAMPLES_DIR)

class ConfigManager:
    """配置管理器"""

    def __init__(self, settings_file: Optional[Path] = None):
        self.settings_file = Path(settings_file) if settings_file else SETTINGS_FILE
        self.settings = Settings()
        self._load_settings()

    def _load_settings(self):
        """加载设置"""
        # 先加载 .env，再重建环境变量覆盖
        env_file = PROJECT_ROOT / ".env"
        if env_file.exists():
            load_dotenv(env_file, override=False)
            self.settings = Settings()

        # 从配置文件加载
        if self.settings_file.exists():
            try:
                with open(self.settings_file, 'r', encoding='utf-8') as f:
                    config_data = json.load(f)
                known = {k: v for k, v in config_data.items() if k in Settings.model_fields}
                self.settings = Settings(**{**self.settings.model_dump(), **known})
            except Exception as e:
                logger.warning(f"加载配置文件失败: {e}")

    def get_computation_config(self) -> ComputationConfig:
        """获取计算配置"""
        return ComputationConfig(
            enumeration_budget=self.settings.enumeration_budget,
            scan_chunk_size=self.settings.scan_chunk_size
        )

    def get_probe_config(self) -> ProbeConfig:
        """获取探测配置"""
        return ProbeConfig(
            trials=self.settings.probe_trials,
            seed=self.settings.probe_seed
        )

    def get_path_config(self) -> PathConfig:
        """获取路径配置"""
        return PathConfig()

    def update_settings(self, **kwargs):
        """更新设置"""
        known = {k: v for k, v in kwargs.items() if k in Settings.model_fields}
        # 重新构造以触发校验
        self.settings = Settings(**{**self.settings.model_dump(), **known})
        self._save_settings()

    def _save_settings(self):
        """保存设置到文件"""
        self.settings_file.parent.mkdir(parents=True, exist_ok=True)

        try:
            with open(self.settings_file, 'w', encoding='utf-8') as f:
                json.dump(self.settings.model_dump(), f, ensure_ascii=False, indent=2)
        except Exception as e:
            logger.warning(f"保存配置文件失败: {e}")

    def export_config(self) -> Dict[str, Any]:
        """导出配置"""
        return {
            "computation_config": {
                "enumeration_budget": self.settings.enumeration_budget,
                "scan_chunk_size": self.settings.scan_chunk_size
            },
            "probe_config": {
                "trials": self.settings.probe_trials,
                "seed": self.settings.probe_seed
            },
            "logging": {
                "log_level": self.settings.log_level,
                "log_file": self.settings.log_file
            },
            "paths": {
                "project_root": str(self.get_path_config().project_root),
                "data_dir": str(self.get_path_config().data_dir),
                "examples_dir": str(self.get_path_config().examples_dir)
            }
        }

# 创建全局配置管理器实例
config_manager = ConfigManager()

def resolve_budget(budget: Optional[int]) -> int:
    """调用方未指定预算时使用全局配置"""
    return budget if budget is not None else config_manager.settings.enumeration_budget

def resolve_chunk_size(chunk_size: Optional[int]) -> int:
    """调用方未指定分块大小时使用全局配置"""
    return chunk_size if chunk_size is not None else config_manager.settings.scan_chunk_size
