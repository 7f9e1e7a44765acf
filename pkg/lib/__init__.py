"""项目库目录.

此目录包含项目使用的第三方库和自定义库。

子模块：
    - hans_loguru: 日志集成
"""


__all__ = [
]
