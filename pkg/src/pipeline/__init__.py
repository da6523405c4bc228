"""
处理流水线包：结构构建、穷举枚举、恒等式计算、报告生成
"""
