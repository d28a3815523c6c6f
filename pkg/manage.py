#!/usr/bin/env python
"""
Piatetski-Shapiro 素数研究工具
用于推导可行范围、搜索指数对以及执行各项数值验证
"""

import click

from pslab import create_context
from pslab.commands import register_commands

@click.group()
@click.option('--config', 'config_name', default=None, help='配置名称: development / production / testing')
def cli(config_name):
    """Piatetski-Shapiro 素数研究工具"""
    create_context(config_name)

register_commands(cli)

if __name__ == '__main__':
    cli()
