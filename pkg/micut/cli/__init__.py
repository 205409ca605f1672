# Copyright 2026 micut authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""micut command line tool.

Exit codes: 0 success, 1 failed check, 2 usage or parse error, 3 exhaustive
limit refusal, 4 precondition rejection.
"""

import argparse
import logging
import random
import sys

# pylint: disable=relative-beyond-top-level
from .. import benchmark
from .. import config
from .. import game
from .. import generators
from .. import logs
from .. import reductions
from .. import reports
from .. import sat
from .. import solvers
from .. import verify
from ..graph import GraphError, max_degree, parse_graph, serialize_graph

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_PRECONDITION = 4

START_PROFILES = ('all-A', 'all-B', 'random')


def _read_graph(path):
  with open(path, 'rb') as f:
    return parse_graph(f)


def _read_instance(path):
  with open(path, 'rb') as f:
    return sat.parse_instance(f)


def _write(path, text):
  if path == '-':
    sys.stdout.write(text)
    return

  with open(path, 'w') as f:
    f.write(text)
  logging.info('Wrote %s', path)


def _emit(args, record, lines):
  """Print the JSON record with --json, otherwise the human lines."""
  if args.json:
    sys.stdout.write(reports.dumps(record))
  else:
    sys.stdout.write(''.join(f'{line}\n' for line in lines))


def _seed(args):
  return config.default_seed if args.seed is None else args.seed


def _restarts(args):
  return config.default_restarts if args.restarts is None else args.restarts


def cmd_gen(args):
  """Write a generated graph or instance."""
  seed = _seed(args)
  comments = [f'micut gen {args.kind} n={args.n} seed={seed}']
  if args.kind == 'rand-m2sat':
    instance = generators.random_instance(args.n, args.m, random.Random(seed))
    comments[0] += f' m={args.m}'
    _write(args.out, sat.serialize_instance(instance, comments))
    return EXIT_OK

  if args.kind == 'gnp-graph':
    g = generators.gnp_graph(args.n, args.p, seed)
    comments[0] += f' p={args.p}'
  elif args.kind == 'cycle':
    g = generators.cycle_graph(args.n)
  elif args.kind == 'path':
    g = generators.path_graph(args.n)
  else:
    g = generators.star_graph(args.n)

  _write(args.out, serialize_graph(g, comments))
  return EXIT_OK


def cmd_solve(args):
  """Solve maximum independent cut on a graph file."""
  g = _read_graph(args.graph)
  seed = _seed(args)
  logging.info('Solving %s with %s', args.graph, args.algo)
  with logs.log_context(instance=args.graph, seed=seed):
    solution = solvers.solve(
        g, args.algo, seed=seed, restarts=_restarts(args))

  record = reports.solution_record(solution)
  _emit(args, record, [
      f'set: {" ".join(str(v) for v in solution.sorted_members)}',
      f'value: {solution.value}',
      f'algorithm: {solution.algorithm}',
  ])
  return EXIT_OK


def _reduce_mis(args):
  g = _read_graph(args.input)
  constructed = reductions.reduce_mis_to_micut(g)
  n = g.node_count
  comments = [
      f'reduction MIS n={n}: nodes {n + 1}..{constructed.node_count} form a '
      'clique joined to every source node'
  ]
  _write(args.out, serialize_graph(constructed, comments))
  return constructed, {
      'from': 'mis',
      'source_node_count': n,
      'source_edge_count': g.edge_count,
      'added_nodes': [n + 1, constructed.node_count],
  }


def _reduce_m2sat(args):
  instance = _read_instance(args.input)
  report = sat.preprocess(instance)
  if args.residual:
    source = report.residual
  else:
    source = sat.Max2SatInstance(
        instance.variable_count,
        tuple(c for c in instance.clauses if not sat.is_tautology(c)))

  reduction = reductions.reduce_2sat_to_micut(source)
  _write(args.out,
         serialize_graph(reduction.graph,
                         reductions.reduction_comments(source, reduction)))
  summary = {
      'from': 'm2sat',
      'variable_count': source.variable_count,
      'clause_count': source.clause_count,
      'chief_nodes': {
          sat.format_literal(literal): node
          for literal, node in sorted(reduction.chief_nodes.items(),
                                      key=lambda kv: (abs(kv[0]), -kv[0]))
      },
      'gadgets': [{
          'clause': gadget.clause_index,
          'literals': list(clause),
          'chiefs': [gadget.chief_1, gadget.chief_2],
          'accessory': [
              gadget.accessory_1, gadget.accessory_2, gadget.accessory_3
          ],
      } for gadget, clause in zip(reduction.gadgets, source.clauses)],
      'preprocess': {
          'removed_tautologies': report.removed_tautologies,
          'forced_variables': {
              sat.format_literal(v): value
              for v, value in sorted(report.forced_variables.items())
          },
          'guaranteed_true': report.guaranteed_true,
          'residual_variable_count': report.residual.variable_count,
          'residual_clause_count': report.residual.clause_count,
          'reduced': 'residual' if args.residual else 'tautology-free',
      },
  }
  if args.certify:
    summary['certificate'] = reports.certificate_record(
        reductions.check_certificate(source, seed=_seed(args)))

  return reduction.graph, summary


def cmd_reduce(args):
  """Build the constructed graph and report its summary."""
  if args.source == 'mis':
    constructed, summary = _reduce_mis(args)
  else:
    constructed, summary = _reduce_m2sat(args)

  summary.update({
      'node_count': constructed.node_count,
      'edge_count': constructed.edge_count,
      'max_degree': max_degree(constructed),
      'output': args.out,
  })
  record = reports.summary_record(summary)
  if args.summary:
    _write(args.summary, reports.dumps(record))

  lines = [
      f'{summary["from"]} reduction: {constructed.node_count} nodes, '
      f'{constructed.edge_count} edges, max degree {summary["max_degree"]}'
  ]
  if 'preprocess' in summary:
    lines.append(
        'preprocess: {removed_tautologies} tautologies removed, '
        '{guaranteed_true} clauses guaranteed true'.format(
            **summary['preprocess']))
  certificate = summary.get('certificate')
  if certificate is not None:
    lines.append(f'certificate: {"ok" if certificate["ok"] else "FAILED"}')

  # Summary JSON goes to stdout unless the graph itself does.
  if args.out != '-':
    _emit(args, record, lines)
  if certificate is not None and not certificate['ok']:
    return EXIT_FAILED
  return EXIT_OK


def cmd_dynamics(args):
  """Run best-response dynamics from a start profile."""
  g = _read_graph(args.graph)
  seed = _seed(args)
  if args.polar:
    params = game.polar_params(g, args.pi_b)
  else:
    params = game.GameParams.from_relative(args.pi_a, args.pi_b)

  if args.start == 'all-A':
    start = game.ActionProfile.uniform(g.node_count, game.Action.A)
  elif args.start == 'all-B':
    start = game.ActionProfile.uniform(g.node_count, game.Action.B)
  else:
    start = game.random_profile(g, random.Random(seed))

  trace = game.best_response_dynamics(
      g, start, params, schedule=args.schedule, seed=seed)
  record = reports.trace_record(g, trace, params, args.schedule, seed)
  polar = record['polar_equilibrium']
  final = (trace.frustration_sequence[-1]
           if trace.moves else trace.initial_frustration)
  _emit(args, record, [
      f'steps: {trace.step_count}',
      f'final profile: {trace.final_profile}',
      f'frustration: {reports.rational(trace.initial_frustration)} -> '
      f'{reports.rational(final)}',
      f'nash: {str(record["nash"]).lower()}',
      f'polar equilibrium: {"n/a" if polar is None else str(polar).lower()}',
      f'steps within n*m^2 = {record["step_bound_nm2"]}: '
      f'{str(record["within_step_bound"]).lower()}',
  ])
  return EXIT_OK


def cmd_verify(args):
  """Run a property suite."""
  record = reports.verify_record(
      verify.run_suite(
          args.suite,
          count=args.count,
          max_n=args.max_n,
          seed=_seed(args),
          workers=args.workers))
  lines = [
      f'suite {record["suite"]}: {record["checked"]} checked, '
      f'{"passed" if record["passed"] else "FAILED"}'
  ]
  lines.extend(f'  seed {failure["seed"]}: {failure["reason"]}'
               for failure in record['failures'])
  _emit(args, record, lines)
  return EXIT_OK if record['passed'] else EXIT_FAILED


def cmd_bench(args):
  """Compare solvers over a directory of graphs."""
  seed = _seed(args)
  restarts = _restarts(args)
  rows = benchmark.bench(
      args.directory,
      algorithms=args.algos,
      seed=seed,
      restarts=restarts,
      timing=not args.no_times)
  if args.json:
    sys.stdout.write(
        reports.dumps(
            reports.bench_record({
                'seed': seed,
                'restarts': restarts,
                'rows': rows
            })))
  else:
    sys.stdout.write(benchmark.to_csv(rows))
  return EXIT_OK


def _algorithms(text):
  names = [name.strip() for name in text.split(',') if name.strip()]
  for name in names:
    if name not in solvers.ALGORITHMS:
      raise argparse.ArgumentTypeError(
          f'unknown algorithm {name!r}, expected one of '
          f'{", ".join(solvers.ALGORITHMS)}')
  if not names:
    raise argparse.ArgumentTypeError('no algorithms given')

  return names


def _build_parser():
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument(
      '--seed', type=int, help='Random seed (default from config, 0)')
  common.add_argument(
      '--json', action='store_true', help='Print the JSON record')
  common.add_argument(
      '--limit-exact', type=int, help='Node limit for exact_micut')
  common.add_argument(
      '--limit-sat', type=int, help='Variable limit for the MAX-2SAT oracle')
  common.add_argument('--config', help='YAML file with limits and defaults')
  common.add_argument(
      '--log-json', action='store_true', help='Log JSON lines to stderr')
  common.add_argument(
      '-v', '--verbose', action='count', default=0, help='More logging')

  parser = argparse.ArgumentParser(
      prog='micut',
      description='Maximum independent cut and anti-coordination games')
  subparsers = parser.add_subparsers(dest='command', required=True)

  gen = subparsers.add_parser(
      'gen', parents=[common], help='Generate a graph or instance')
  gen.add_argument(
      'kind', choices=generators.GRAPH_KINDS + ('rand-m2sat',))
  gen.add_argument('--n', type=int, required=True, help='Nodes or variables')
  gen.add_argument('--m', type=int, default=0, help='Clauses (rand-m2sat)')
  gen.add_argument(
      '--p', type=float, default=0.5, help='Edge probability (gnp-graph)')
  gen.add_argument('--out', default='-', help='Output path, - for stdout')
  gen.set_defaults(func=cmd_gen)

  solve = subparsers.add_parser(
      'solve', parents=[common], help='Solve maximum independent cut')
  solve.add_argument('graph', help='DIMACS graph file')
  solve.add_argument('--algo', choices=solvers.ALGORITHMS, default='exact')
  solve.add_argument(
      '--restarts', type=int, help='Local search restarts (default 10)')
  solve.set_defaults(func=cmd_solve)

  reduce_ = subparsers.add_parser(
      'reduce', parents=[common], help='Build a reduction instance')
  reduce_.add_argument(
      '--from', dest='source', choices=('mis', 'm2sat'), required=True)
  reduce_.add_argument('input', help='DIMACS graph or m2sat file')
  reduce_.add_argument(
      '--out', required=True, help='Constructed DIMACS graph, - for stdout')
  reduce_.add_argument('--summary', help='Also write the JSON summary here')
  reduce_.add_argument(
      '--residual',
      action='store_true',
      help='Reduce the fully preprocessed residual instance (m2sat)')
  reduce_.add_argument(
      '--certify',
      action='store_true',
      help='Check the reduction identities against the oracles (m2sat)')
  reduce_.set_defaults(func=cmd_reduce)

  dynamics = subparsers.add_parser(
      'dynamics', parents=[common], help='Run best-response dynamics')
  dynamics.add_argument('graph', help='DIMACS graph file')
  dynamics.add_argument('--pi-a', default='1', help='Relative payoff pi_A')
  dynamics.add_argument('--pi-b', default='1', help='Relative payoff pi_B')
  dynamics.add_argument(
      '--polar',
      action='store_true',
      help='Use pi_A = (m + 1) * pi_B, ignoring --pi-a')
  dynamics.add_argument(
      '--schedule',
      choices=[s.value for s in game.Schedule],
      default=game.Schedule.ROUND_ROBIN.value)
  dynamics.add_argument('--start', choices=START_PROFILES, default='all-A')
  dynamics.set_defaults(func=cmd_dynamics)

  verify_ = subparsers.add_parser(
      'verify', parents=[common], help='Run a property suite')
  verify_.add_argument('--suite', choices=sorted(verify.SUITES), required=True)
  verify_.add_argument('--count', type=int, default=100)
  verify_.add_argument('--max-n', type=int, default=6)
  verify_.add_argument(
      '--workers', type=int, default=1, help='Worker processes')
  verify_.set_defaults(func=cmd_verify)

  bench = subparsers.add_parser(
      'bench', parents=[common], help='Compare solvers on graph files')
  bench.add_argument('directory', help='Directory of DIMACS graphs')
  bench.add_argument(
      '--algos',
      type=_algorithms,
      default=list(solvers.ALGORITHMS),
      help='Comma separated algorithms')
  bench.add_argument(
      '--restarts', type=int, help='Local search restarts (default 10)')
  bench.add_argument(
      '--no-times', action='store_true', help='Omit wall times')
  bench.set_defaults(func=cmd_bench)

  return parser


def _configure(args):
  if args.config:
    config.load(args.config)
  config.set_limits(exact_limit=args.limit_exact, sat_limit=args.limit_sat)


def main(argv=None):
  parser = _build_parser()
  args = parser.parse_args(argv)

  level = logging.WARNING
  if args.verbose == 1:
    level = logging.INFO
  elif args.verbose > 1:
    level = logging.DEBUG
  logs.setup_logging('micut', level=level, json_output=args.log_json)

  saved = config.snapshot()
  try:
    _configure(args)
    return args.func(args)
  except (reductions.ReductionError, sat.PreconditionError,
          solvers.SolverError) as e:
    logging.error('Precondition failed: %s', e)
    return EXIT_PRECONDITION
  except config.LimitExceededError as e:
    logging.error('%s (raise it with --limit-exact/--limit-sat or --config)',
                  e)
    return EXIT_LIMIT
  except (GraphError, sat.InstanceError, game.GameError,
          generators.GeneratorError, verify.SuiteError,
          benchmark.BenchError) as e:
    logging.error('%s', e)
    return EXIT_USAGE
  except (OSError, ValueError) as e:
    logging.error('%s', e)
    return EXIT_USAGE
  finally:
    config.set_limits(**saved)
