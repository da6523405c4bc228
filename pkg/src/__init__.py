"""
pomset 块码工具核心包
"""
