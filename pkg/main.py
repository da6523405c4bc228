#!/usr/bin/env python3
"""
pomset 块码工具 - 主启动文件
支持命令行和模块导入两种使用方式
"""
import sys
from pathlib import Path

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.cli import execute


def main():
    """主函数 - 命令行入口"""
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()
