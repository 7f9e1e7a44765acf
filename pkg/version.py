# version.py
"""项目版本信息集中管理.

在此文件中修改版本号，命令行标题与报告中的 tool_version 会自动同步更新。
"""

__version__ = "1.0.0"
__app_name__ = "Fox-Wright 恒等式验证工具"

# 组合完整的程序版本字符串
APP_TITLE = f"{__app_name__} V{__version__}"
