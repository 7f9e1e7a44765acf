# services/core/config/defaults.py
"""默认程序配置模块.

本模块定义了应用程序的默认配置常量。
"""

#: 文件日志格式（不包含颜色标记）
_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | P{extra[process]} | {extra[name]}:{extra[function]}:{extra[line]} - {message}"

#: 默认程序配置字典
DEFAULT_CONFIG = {

    # 数值选项
    "numerics": {
        # 级数求和
        "series": {
            # 项相对于部分和的停止阈值
            "rel_stop": 1e-16,
            # 停止前要求连续递减的项数
            "decreasing_run": 3,
            # 项数上限
            "max_terms": 200000,
            # 抵消因子超过此值时放大误差估计
            "cancellation_limit": 1e4,

            # 扩展精度重求和（mpmath）
            "extended_precision": {
                "enabled": True,
                # 触发重求和的抵消因子
                "trigger": 1e2,
                # 最大十进制位数
                "max_dps": 400
            }
        },

        # 半无限区间求积
        "quad": {
            # 每段 Gauss-Legendre 阶数
            "gauss_order": 32,
            # 目标相对精度
            "tol": 1e-11,
            # 包络尾部截断的相对阈值
            "tail_rel": 1e-14,
            # 振荡分段上限
            "max_segments": 10000,
            # Euler 变换最大层数
            "euler_depth": 40,
            # 双指数变换最大加密层数
            "de_max_level": 9,
            # 每批向量化计算的段数
            "chunk": 16
        }
    },

    # 恒等式验证
    "identities": {
        # 含求积的验证默认容差
        "default_tol": 1e-8,
        # 级数对闭式的验证默认容差
        "series_tol": 1e-10,
        # k 求和截断的相对阈值
        "truncation_rel": 1e-13,
        # 是否计算第三条路径（逐项求积、2F1 形式等）
        "dual_route": True,
        # k 求和项数上限
        "max_k": 1000000
    },

    # 网格运行
    "grid": {
        # 并发进程数，0 表示可用 CPU 数
        "jobs": 0,
        # 网格点数上限
        "max_points": 100000
    },

    # 输出路径配置
    "output": {
        # 是否自动生成基于时间戳的输出目录
        "auto_generate": False,

        # 输出根目录（相对路径或绝对路径）
        # 当 auto_generate=True 时，会在此目录下创建时间戳子目录
        "root_dir": "./output",

        # 手动指定的输出目录（仅在 auto_generate=False 时使用）
        # 如果为 null，则使用 root_dir
        "manual_dir": None,

        # 子目录配置
        "subdirs": {
            "logs": "logs",
        }
    },

    # 日志配置
    "logging": {
        # 全局日志级别: TRACE, DEBUG, INFO, SUCCESS, WARNING, ERROR, CRITICAL
        "level": "INFO",

        # 控制台日志配置（输出到 stderr，stdout 只输出结果）
        "console": {
            "enabled": True,
            "level": "WARNING",
            "colorize": True,
            "format": "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | <cyan>{extra[name]}</cyan>:<cyan>{extra[function]}</cyan>:<cyan>{extra[line]}</cyan> - <level>{message}</level>"
        },

        # 日志文件列表，默认全部禁用
        "files": [
            {
                "name": "all",
                "enabled": False,
                "filename": "all.log",
                "level": "TRACE",
                "rotation": "10 MB",
                "retention": "7 days",
                "compression": "zip",
                "format": _FILE_FORMAT
            },
            {
                # 只记录 WARNING 及以上：回退、带注释的失败
                "name": "warning",
                "enabled": False,
                "filename": "warning.log",
                "level": "WARNING",
                "rotation": None,
                "retention": "30 days",
                "compression": None,
                "format": _FILE_FORMAT
            }
        ]
    }
}
