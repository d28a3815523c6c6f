import functools
import logging
import os
import time

import click

from pslab import get_config
from pslab.bounds import (
    combine,
    derive_E_terms,
    historical_compare,
    search_pairs,
    small_x_terms,
    twelve_term_bound,
    wu_terms,
)
from pslab.bounds.substitution import Window
from pslab.bounds.terms import SMALL_X_RESTRICTION, WU_RESTRICTION
from pslab.exponents import PAIR_MAP, ExponentPair, apply_word, get_pair_by_identifier, is_valid_pair, parse_rational
from pslab.expsum import (
    default_suite,
    envelope_ratio,
    random_spec,
    run_suite,
    spacing_bound_ratio,
    spacing_count_naive,
    spacing_count_sorted,
    sweep_grid,
    verify_vaaler,
)
from pslab.expsum.envelope import max_ratio
from pslab.expsum.trilinear import GENERATOR_NAME
from pslab.primes import RationalExponent, membership, pi_c, psi_difference_sum
from pslab.responses import RunManifest, render_csv, render_json, result_error, result_success

logger = logging.getLogger(__name__)

EXIT_VALIDATION = 2
EXIT_INTERNAL = 1

def _resolve_path(path: str) -> str:
    """相对路径按配置的 OUTPUT_DIR 解析。"""
    output_dir = get_config().OUTPUT_DIR
    if output_dir and not os.path.isabs(path):
        os.makedirs(output_dir, exist_ok=True)
        return os.path.join(output_dir, path)
    return path

def _write(text: str, path: str = None):
    if path is None or path == '-':
        click.echo(text, nl=False)
        return
    path = _resolve_path(path)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    click.echo(click.style(f"✅ 已写入 {path}", fg='green'), err=True)

def _fail(message: str, code: int, response: dict = None):
    """失败信封写到标准输出 (CSV 模式不写), 红色提示写到 stderr, 然后以 code 退出。"""
    if response is not None:
        click.echo(render_json(response), nl=False)
    click.echo(click.style(f"❌ {message}", fg='red'), err=True)
    click.get_current_context().exit(code)

def output_options(func):
    """--json / --csv [PATH] / --output PATH"""
    @click.option('--json', 'as_json', is_flag=True, help='输出 JSON (默认)')
    @click.option('--csv', 'csv_path', is_flag=False, flag_value='-', default=None,
                  help='输出 CSV; 不带参数写到标准输出, 带路径则写入文件')
    @click.option('--output', '-o', 'output_path', default=None, help='把 JSON 写入文件')
    @functools.wraps(func)
    def wrapper(*args, as_json, csv_path, output_path, **kwargs):
        if as_json and csv_path is not None:
            raise click.UsageError('--json 与 --csv 不能同时使用')
        return func(*args, output=(csv_path, output_path), **kwargs)
    return wrapper

def run_command(subcommand: str, parameters: dict, output: tuple, compute, seed: int = None, generator: str = None):
    """
    执行一次计算并输出结果与运行清单。

    compute() 返回 (data, records, message); records 为 CSV 的逐行记录。
    """
    csv_path, output_path = output
    started = time.perf_counter()

    def build_manifest():
        return RunManifest(subcommand, parameters, seed=seed, generator=generator,
                           duration_seconds=round(time.perf_counter() - started, 6))

    def failure(e: Exception, code: int):
        response = result_error(str(e), code, manifest=build_manifest()) if csv_path is None else None
        _fail(str(e), code, response)

    try:
        data, records, message = compute()
    except ValueError as e:
        logger.error(f"{subcommand} 参数错误: {e}", exc_info=True)
        failure(e, EXIT_VALIDATION)
    except Exception as e:
        logger.error(f"{subcommand} 执行失败: {e}", exc_info=True)
        failure(e, EXIT_INTERNAL)

    manifest = build_manifest()
    if csv_path is not None:
        _write(render_csv(records, manifest), csv_path)
    else:
        _write(render_json(result_success(data, message, manifest)), output_path)

def _resolve_pair(kappa: str, lambda_: str, pair_name: str, default: str = 'tty2025') -> ExponentPair:
    if (kappa is None) != (lambda_ is None):
        raise ValueError('--kappa 与 --lambda 必须同时给出')
    if kappa is not None:
        return ExponentPair.of(kappa, lambda_)
    return get_pair_by_identifier(pair_name or default).pair

_PAIR_OPTIONS = [
    click.option('--kappa', default=None, help='指数对的 kappa, 形如 num/den'),
    click.option('--lambda', 'lambda_', default=None, help='指数对的 lambda, 形如 num/den'),
    click.option('--pair', 'pair_name', default=None, help=f"已知指数对: {', '.join(PAIR_MAP)}"),
]

_T2_OPTIONS = [
    click.option('--alpha', default='1/2'),
    click.option('--beta', default='1'),
    click.option('--gamma', default='3/4'),
    click.option('--seed', type=int, default=42, help='系数生成器的种子'),
    click.option('--wu-compare', is_flag=True, help='同时计算 Wu 包络'),
    click.option('--threads', type=int, default=None, help='直接求和的线程数'),
]

def _apply_options(options):
    def decorator(func):
        for option in reversed(options):
            func = option(func)
        return func
    return decorator

pair_options = _apply_options(_PAIR_OPTIONS)
t2_options = _apply_options(_T2_OPTIONS)

def _parse_real(value: str) -> float:
    """实数参数接受 '1/2' 或 '0.5'。"""
    try:
        return float(parse_rational(value))
    except ValueError:
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ValueError(f"无法解析的实数: {value!r}")

def _parse_exponent(value: str) -> RationalExponent:
    return RationalExponent.parse(value)

def register_commands(cli):

    @cli.command('derive-range')
    @pair_options
    @click.option('--mu-low', default=None, help='窗口下端 mu_low (默认 2/3)')
    @output_options
    def derive_range(kappa, lambda_, pair_name, mu_low, output):
        """由指数对推出可行范围 gamma > gamma_min, c < c_max"""
        def compute():
            pair = _resolve_pair(kappa, lambda_, pair_name)
            report = combine(pair, Window.type_one_prime(mu_low=mu_low))
            return report.to_dict(), report.to_records(), 'range derived'
        run_command('derive-range', {'kappa': kappa, 'lambda': lambda_, 'pair': pair_name, 'mu_low': mu_low},
                    output, compute)

    @cli.command()
    @click.option('--max-len', 'max_len', type=int, required=True, help='A/B 词长上限')
    @click.option('--workers', type=int, default=1, help='并行进程数')
    @output_options
    def search(max_len, workers, output):
        """在 A/B 词生成的指数对中搜索最优者"""
        def compute():
            result = search_pairs(max_len, workers=workers)
            data = result.to_dict()
            record = {k: v for k, v in data.items() if k != 'report'}
            record.update(record.pop('pair'))
            return data, [record], f"best word {result.word!r}"
        run_command('search', {'max_len': max_len, 'workers': workers}, output, compute)

    @cli.command()
    @pair_options
    @output_options
    def history(kappa, lambda_, pair_name, output):
        """把计算得到的 c_max 与历史记录比较"""
        def compute():
            report = combine(_resolve_pair(kappa, lambda_, pair_name))
            comparison = historical_compare(report)
            return comparison, comparison['rows'], 'history compared'
        run_command('history', {'kappa': kappa, 'lambda': lambda_, 'pair': pair_name}, output, compute)

    @cli.command()
    @click.option('--table', type=click.Choice(['twelve-term', 'wu', 'small-x', 'substituted']), default='twelve-term',
                  help='输出哪一张项表')
    @click.option('--k', 'k', type=int, default=2, help='Wu 上界的参数 k >= 2')
    @pair_options
    @output_options
    def terms(table, k, kappa, lambda_, pair_name, output):
        """输出上界的单项式表或代换后的 E 项"""
        def compute():
            metadata = {}
            if table == 'twelve-term':
                rows = [t.to_dict() for t in twelve_term_bound(_resolve_pair(kappa, lambda_, pair_name))]
            elif table == 'wu':
                rows = [t.to_dict() for t in wu_terms(k)]
                metadata['restriction'] = WU_RESTRICTION
            elif table == 'small-x':
                rows = [t.to_dict() for t in small_x_terms()]
                metadata['restriction'] = SMALL_X_RESTRICTION
            else:
                rows = [t.to_dict() for t in derive_E_terms(_resolve_pair(kappa, lambda_, pair_name))]
            return {'table': table, 'terms': rows, **metadata}, rows, f"{len(rows)} terms"
        run_command('terms', {'table': table, 'k': k, 'kappa': kappa, 'lambda': lambda_, 'pair': pair_name},
                    output, compute)

    @cli.command()
    @click.option('--word', default=None, help='A/B 词, 从 (0, 1) 出发自左向右应用')
    @click.option('--name', default=None, help='已知指数对的标识符')
    @click.option('--list', 'list_all', is_flag=True, help='列出全部已知指数对')
    @output_options
    def pairs(word, name, list_all, output):
        """指数对演算"""
        def compute():
            if list_all:
                rows = [named.to_dict() for named in PAIR_MAP.values()]
                return {'pairs': rows}, rows, f"{len(rows)} pairs"
            if name is not None:
                data = get_pair_by_identifier(name).to_dict()
            elif word is not None:
                pair = apply_word(word)
                data = {'word': word, **pair.to_dict()}
            else:
                raise ValueError('需要 --word、--name 或 --list 之一')
            data['valid'] = is_valid_pair(ExponentPair.of(data['kappa'], data['lambda']))
            return data, [data], 'pair computed'
        run_command('pairs', {'word': word, 'name': name, 'list': list_all}, output, compute)

    @cli.command()
    @click.option('--c', 'c', required=True, help='指数 c = p/q > 1')
    @click.option('--x', 'xs', type=int, required=True, multiple=True, help='上界 x, 可重复给出以生成扫描表')
    @click.option('--segments', type=int, default=None, help='并行进程数')
    @output_options
    def count(c, xs, segments, output):
        """Piatetski-Shapiro 素数计数 pi_c(x)"""
        def compute():
            exponent = _parse_exponent(c)
            rows = [pi_c(x, exponent, workers=segments).to_dict() for x in xs]
            data = rows[0] if len(rows) == 1 else {'rows': rows}
            csv_rows = [{k: row[k] for k in ('x', 'c', 'count', 'main_term', 'ratio')} for row in rows]
            return data, csv_rows, 'counted'
        run_command('count', {'c': c, 'x': list(xs), 'segments': segments}, output, compute)

    @cli.command('membership')
    @click.option('--p', 'pr', type=int, required=True, help='待判定的整数 (通常为素数)')
    @click.option('--c', 'c', required=True, help='指数 c = p/q > 1')
    @output_options
    def membership_command(pr, c, output):
        """判定 pr 是否等于某个 floor(n^c)"""
        def compute():
            exponent = _parse_exponent(c)
            data = {'p': pr, 'c': str(exponent), 'member': membership(pr, exponent)}
            return data, [data], 'membership decided'
        run_command('membership', {'p': pr, 'c': c}, output, compute)

    @cli.command('psi-sum')
    @click.option('--c', 'c', required=True, help='指数 c = p/q > 1')
    @click.option('--x', 'x', type=int, required=True, help='求和区间 (x/2, x] 的上端')
    @output_options
    def psi_sum(c, x, output):
        """Lambda 加权的 psi 差分和"""
        def compute():
            report = psi_difference_sum(x, _parse_exponent(c))
            return report.to_dict(), [report.to_dict()], 'psi sum computed'
        run_command('psi-sum', {'c': c, 'x': x}, output, compute)

    @cli.group()
    def verify():
        """数值验证"""

    @verify.command('vaaler')
    @click.option('--H', 'H', type=int, required=True, help='截断参数 H >= 1')
    @click.option('--grid', 'grid', type=int, default=10000, help='网格点数 (>= 100)')
    @output_options
    def verify_vaaler_command(H, grid, output):
        """检验 Vaaler 逼近不等式"""
        def compute():
            check = verify_vaaler(H, grid)
            return check.to_dict(), [check.to_dict()], 'pass' if check.passed else 'violation found'
        run_command('verify vaaler', {'H': H, 'grid': grid}, output, compute)

    @verify.command('kl')
    @click.option('--suite', type=click.Choice(['default']), default='default', help='用例集')
    @output_options
    def verify_kl(suite, output):
        """Kusmin-Landau 用例集"""
        def compute():
            results = [r.to_dict() for r in run_suite(default_suite())]
            passed = sum(1 for r in results if r['pass'])
            data = {'suite': suite, 'cases': len(results), 'passed': passed, 'results': results}
            return data, results, f"{passed}/{len(results)} passed"
        run_command('verify kl', {'suite': suite}, output, compute, seed=get_config().KL_SUITE_SEED,
                    generator=GENERATOR_NAME)

    @verify.command('spacing')
    @click.option('--M', 'M', type=int, required=True)
    @click.option('--N', 'N', type=int, required=True)
    @click.option('--alpha', required=True)
    @click.option('--beta', required=True)
    @click.option('--delta', required=True)
    @output_options
    def verify_spacing(M, N, alpha, beta, delta, output):
        """间距计数: 直接计数与排序扫描对照"""
        def compute():
            a, b, d = _parse_real(alpha), _parse_real(beta), _parse_real(delta)
            naive = spacing_count_naive(M, N, a, b, d)
            merged = spacing_count_sorted(M, N, a, b, d)
            ratio = spacing_bound_ratio(M, N, a, b, d)
            data = {
                'M': M, 'N': N, 'alpha': a, 'beta': b, 'delta': d,
                'count_naive': naive, 'count_sorted': merged, 'agree': naive == merged,
                'ratio': ratio, 'ceiling': get_config().SPACING_RATIO_CEILING,
            }
            return data, [data], 'counted'
        run_command('verify spacing', {'M': M, 'N': N, 'alpha': alpha, 'beta': beta, 'delta': delta},
                    output, compute)

    @verify.command('t2')
    @click.option('--X', 'X', required=True, help='X > 0')
    @click.option('--H', 'H', type=int, required=True)
    @click.option('--M', 'M', type=int, required=True)
    @click.option('--N', 'N', type=int, required=True)
    @t2_options
    @pair_options
    @output_options
    def verify_t2(X, H, M, N, alpha, beta, gamma, seed, wu_compare, threads, kappa, lambda_, pair_name, output):
        """直接计算三重和并与上界包络比较"""
        def compute():
            spec = random_spec(_parse_real(X), H, M, N, _parse_real(alpha), _parse_real(beta), _parse_real(gamma),
                               seed)
            report = envelope_ratio(spec, _resolve_pair(kappa, lambda_, pair_name), wu_compare=wu_compare,
                                    workers=threads)
            data = {**spec.parameters(), 'seed': seed, **report.to_dict()}
            return data, [{k: v for k, v in data.items() if k != 'warnings'}], 'envelope compared'
        run_command('verify t2', {'X': X, 'H': H, 'M': M, 'N': N, 'alpha': alpha, 'beta': beta, 'gamma': gamma,
                                  'wu_compare': wu_compare, 'kappa': kappa, 'lambda': lambda_, 'pair': pair_name},
                    output, compute, seed=seed, generator=GENERATOR_NAME)

    @verify.command('t2-sweep')
    @click.option('--X', 'X_values', multiple=True, default=['100', '1000', '10000'])
    @click.option('--H', 'H_values', type=int, multiple=True, default=[8, 16, 32])
    @click.option('--M', 'M_values', type=int, multiple=True, default=[8, 16, 32])
    @click.option('--N', 'N_values', type=int, multiple=True, default=[8, 16, 32])
    @t2_options
    @pair_options
    @output_options
    def verify_t2_sweep(X_values, H_values, M_values, N_values, alpha, beta, gamma, seed, wu_compare, threads,
                        kappa, lambda_, pair_name, output):
        """在参数网格上扫描包络比值"""
        def compute():
            frame = sweep_grid(_resolve_pair(kappa, lambda_, pair_name), [_parse_real(x) for x in X_values],
                               H_values, M_values, N_values, _parse_real(alpha), _parse_real(beta),
                               _parse_real(gamma), seed, wu_compare=wu_compare, workers=threads)
            ceiling = get_config().ENVELOPE_RATIO_CEILING
            observed = max_ratio(frame)
            records = frame.to_dict(orient='records')
            data = {'cells': len(records), 'max_ratio': observed, 'ceiling': ceiling,
                    'within_ceiling': observed <= ceiling, 'rows': records}
            return data, records, 'sweep finished'
        run_command('verify t2-sweep', {'X': list(X_values), 'H': list(H_values), 'M': list(M_values),
                                        'N': list(N_values), 'alpha': alpha, 'beta': beta, 'gamma': gamma,
                                        'kappa': kappa, 'lambda': lambda_, 'pair': pair_name},
                    output, compute, seed=seed, generator=GENERATOR_NAME)
