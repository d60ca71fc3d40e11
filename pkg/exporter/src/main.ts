/**
 * CLI: emit a schema-1 character dataset for a named small group.
 *
 *   node dist/main.js export "SL(2,3)" -o sl23.json
 *   node dist/main.js export A6 --tiers classes,quotients,supertheories
 */

import { writeFileSync } from "node:fs";
import { ALL_TIERS, exportGroup } from "./export.js";

function usage(): never {
  process.stderr.write(
    "usage: main.js export <group-spec> [-o out.json] [--tiers a,b,c] [--max-order N]\n" +
      `  tiers: ${ALL_TIERS.join(", ")} (default: classes,quotients,supertheories)\n` +
      "  specs: trivial, C<n>, S<n>, A<n>, SL(2,q), GL(2,q), and AxB products\n",
  );
  process.exit(2);
}

export function main(argv: string[]): void {
  if (argv.length < 2 || argv[0] !== "export") usage();
  const spec = argv[1];
  let out: string | null = null;
  let tiers = new Set(["classes", "quotients", "supertheories"]);
  let maxOrder: number | undefined;
  for (let i = 2; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "-o" || arg === "--output") {
      out = argv[++i];
    } else if (arg === "--tiers") {
      const requested = (argv[++i] ?? "").split(",").filter(Boolean);
      for (const t of requested) {
        if (!ALL_TIERS.includes(t)) {
          process.stderr.write(`unknown tier ${t}\n`);
          process.exit(2);
        }
      }
      tiers = new Set(requested);
    } else if (arg === "--max-order") {
      maxOrder = Number(argv[++i]);
    } else {
      usage();
    }
  }
  const doc = exportGroup({ spec, tiers, maxOrder });
  const payload = JSON.stringify(doc, null, 1) + "\n";
  if (out) {
    writeFileSync(out, payload);
    process.stderr.write(`wrote ${out}\n`);
  } else {
    process.stdout.write(payload);
  }
}

main(process.argv.slice(2));
