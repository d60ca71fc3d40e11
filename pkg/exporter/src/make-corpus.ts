/**
 * Regenerates the bundled dataset corpus of the analysis library.
 *
 *   node dist/make-corpus.js [output-dir]
 *
 * Cyclotomic value tables are included for the small groups only; the
 * larger datasets stay lean and exercise the values-absent code paths.
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { exportGroup } from "./export.js";

const BASE_TIERS = ["classes", "quotients", "supertheories"];

const CORPUS: { file: string; spec: string; values: boolean }[] = [
  { file: "s3", spec: "S3", values: true },
  { file: "c3", spec: "C3", values: true },
  { file: "a4", spec: "A4", values: true },
  { file: "s4", spec: "S4", values: true },
  { file: "sl23", spec: "SL(2,3)", values: true },
  { file: "gl23", spec: "GL(2,3)", values: true },
  { file: "a5", spec: "A5", values: false },
  { file: "a6", spec: "A6", values: false },
  { file: "sl28", spec: "SL(2,8)", values: false },
  { file: "c2", spec: "C2", values: true },
  { file: "sl23xc2", spec: "SL(2,3)xC2", values: false },
  { file: "s3xs3", spec: "S3xS3", values: false },
];

const outDir = process.argv[2] ?? join("..", "src", "charmonoid", "datasets");
mkdirSync(outDir, { recursive: true });
for (const entry of CORPUS) {
  const tiers = new Set(entry.values ? [...BASE_TIERS, "values"] : BASE_TIERS);
  const doc = exportGroup({ spec: entry.spec, tiers });
  const path = join(outDir, `${entry.file}.json`);
  writeFileSync(path, JSON.stringify(doc, null, 1) + "\n");
  process.stderr.write(`wrote ${path}\n`);
}
