/**
 * Batch entry point: read a benchmark CSV, write one SVG per mode/dist.
 *
 *   tsx src/cli.ts <csv-path> <out-dir> [--mode <mode>] [--metric wall_nanos|ops_counter]
 */

import { mkdirSync, readFileSync, writeFileSync } from 'node:fs';
import { join } from 'node:path';

import { parseCsv, SchemaError } from './csv.js';
import { Metric, renderAll } from './render.js';

export function run(argv: string[]): number {
  const positional: string[] = [];
  let modeFilter: string | undefined;
  let metric: Metric = 'wall_nanos';
  for (let i = 0; i < argv.length; i++) {
    if (argv[i] === '--mode') {
      modeFilter = argv[++i];
    } else if (argv[i] === '--metric') {
      const m = argv[++i];
      if (m !== 'wall_nanos' && m !== 'ops_counter') {
        console.error(`unknown metric '${m}'`);
        return 2;
      }
      metric = m;
    } else {
      positional.push(argv[i]);
    }
  }
  if (positional.length !== 2) {
    console.error('usage: cli.ts <csv-path> <out-dir> [--mode <mode>] [--metric <metric>]');
    return 2;
  }
  const [csvPath, outDir] = positional;
  let rows;
  try {
    rows = parseCsv(readFileSync(csvPath, 'utf-8'));
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
      return 1;
    }
    throw err;
  }
  const { charts, warnings } = renderAll(rows, modeFilter, metric);
  for (const w of warnings) {
    console.warn(`warning: ${w}`);
  }
  mkdirSync(outDir, { recursive: true });
  for (const chart of charts) {
    writeFileSync(join(outDir, `${chart.name}.svg`), chart.svg);
    console.log(`${chart.name}.svg: ${chart.seriesCount} series`);
  }
  return 0;
}

process.exitCode = run(process.argv.slice(2));
