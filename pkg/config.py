import os
import json
import logging
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


class Config:
    # 精确算术缓存配置
    PASCAL_CACHE_ROWS = int(os.getenv("GENBERN_PASCAL_CACHE_ROWS", 256))
    STIRLING_INITIAL_ROWS = int(os.getenv("GENBERN_STIRLING_INITIAL_ROWS", 64))

    # 默认计算方法，不从环境变量读取
    DEFAULT_METHOD = "doublesum"

    # 校验套件默认范围
    VERIFY_MAX_N = int(os.getenv("GENBERN_VERIFY_MAX_N", 20))
    VERIFY_MAX_A = int(os.getenv("GENBERN_VERIFY_MAX_A", 4))
    VERIFY_ENUM_CAP = int(os.getenv("GENBERN_VERIFY_ENUM_CAP", 10))

    # 日志配置
    LOG_LEVEL = os.getenv("GENBERN_LOG_LEVEL", "WARNING").upper()
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    # 路径配置
    OUTPUT_DIR = os.getenv("GENBERN_OUTPUT_DIR", "output")
    CONFIG_FILE = os.getenv("GENBERN_CONFIG_FILE", "genbern.json")

    @classmethod
    def ensure_directories_exist(cls):
        """确保导出目录存在"""
        if cls.OUTPUT_DIR and not os.path.exists(cls.OUTPUT_DIR):
            os.makedirs(cls.OUTPUT_DIR, exist_ok=True)
            logger.info(f"创建目录: {cls.OUTPUT_DIR}")

    @classmethod
    def init(cls):
        """初始化配置（脚本启动时调用）"""
        cls.load_config()
        cls.ensure_directories_exist()
        logger.info(f"输出目录: {cls.OUTPUT_DIR}")

    @classmethod
    def load_config(cls):
        """加载可选的 JSON 配置文件，只覆盖校验范围；文件不存在时保持默认值"""
        if not os.path.exists(cls.CONFIG_FILE):
            return False

        with open(cls.CONFIG_FILE, 'r', encoding='utf-8') as f:
            config_data = json.load(f)

        if "verify_max_n" in config_data:
            cls.VERIFY_MAX_N = int(config_data["verify_max_n"])
        if "verify_max_a" in config_data:
            cls.VERIFY_MAX_A = int(config_data["verify_max_a"])
        if "verify_enum_cap" in config_data:
            cls.VERIFY_ENUM_CAP = int(config_data["verify_enum_cap"])
        logger.debug(f"已加载配置文件: {cls.CONFIG_FILE}")
        return True
