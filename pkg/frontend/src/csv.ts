/**
 * Reader for the benchmark CSV schema:
 *   mode,structure,kernel,dist,n,batch,wall_nanos,ops_counter,hull_size
 *
 * Missing required columns raise SchemaError; unknown extra columns are
 * tolerated with a warning so newer producers keep working.
 */

export const REQUIRED_COLUMNS = [
  'mode', 'structure', 'kernel', 'dist', 'n', 'batch',
  'wall_nanos', 'ops_counter', 'hull_size',
] as const;

export interface BenchRow {
  mode: string;
  structure: string;
  kernel: string;
  dist: string;
  n: number;
  batch: number;
  wall_nanos: number;
  ops_counter: number;
  hull_size: number;
}

export class SchemaError extends Error {}

function splitLine(line: string): string[] {
  // the schema contains no quoted or embedded-comma fields
  return line.split(',').map((s) => s.trim());
}

export function parseCsv(text: string, warn: (msg: string) => void = console.warn): BenchRow[] {
  const lines = text.split(/\r?\n/).filter((l) => l.trim().length > 0);
  if (lines.length === 0) {
    return [];
  }
  const header = splitLine(lines[0]);
  for (const col of REQUIRED_COLUMNS) {
    if (!header.includes(col)) {
      throw new SchemaError(`missing required column '${col}'`);
    }
  }
  const extras = header.filter((c) => !(REQUIRED_COLUMNS as readonly string[]).includes(c));
  if (extras.length > 0) {
    warn(`ignoring unknown columns: ${extras.join(', ')}`);
  }
  const idx = new Map(header.map((c, i) => [c, i]));
  const rows: BenchRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = splitLine(lines[i]);
    if (parts.length < header.length) {
      throw new SchemaError(`row ${i + 1} has ${parts.length} fields, expected ${header.length}`);
    }
    const get = (c: string) => parts[idx.get(c)!];
    const num = (c: string) => {
      const v = Number(get(c));
      if (!Number.isFinite(v)) {
        throw new SchemaError(`row ${i + 1}: column '${c}' is not numeric: '${get(c)}'`);
      }
      return v;
    };
    rows.push({
      mode: get('mode'),
      structure: get('structure'),
      kernel: get('kernel'),
      dist: get('dist'),
      n: num('n'),
      batch: num('batch'),
      wall_nanos: num('wall_nanos'),
      ops_counter: num('ops_counter'),
      hull_size: num('hull_size'),
    });
  }
  return rows;
}
