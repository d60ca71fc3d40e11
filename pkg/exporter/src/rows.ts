/**
 * Induced-character rows.
 *
 * For every subgroup class representative H and every linear character
 * lambda of H, the row lists the scalar products of the induced
 * character with each irreducible.  Frobenius reciprocity turns each
 * entry into (1/|H|) sum_{h in H} lambda(h) chi(h^-1), evaluated mod p
 * and lifted (entries are nonnegative integers bounded by [G:H] < p).
 *
 * lambda values are embedded via the canonical primitive root of F_p,
 * the table rows via the table's own embedding; mixing the two merely
 * permutes the lambdas of H among themselves, and the full set of
 * lambdas is enumerated, so the row multiset is exact.
 */

import { linearCharacters } from "./abelian.js";
import { Group, subgroupClasses } from "./group.js";
import { CharacterTable } from "./table.js";

export interface ExportRow {
  row: number[];
  subgroupOrder: number;
  count: number;
}

export function inducedRows(table: CharacterTable): ExportRow[] {
  const g = table.group;
  const field = table.field;
  const classes = subgroupClasses(g);
  const rowCounts = new Map<string, ExportRow>();
  for (const cls of classes) {
    const h = cls.rep;
    const invOrderH = field.inv(h.length % field.p);
    const index = g.order / h.length;
    const { conductor, characters } = linearCharacters(g, h);
    const unity = field.rootOfUnity(conductor);
    for (const lambda of characters) {
      const row: number[] = [];
      for (let j = 0; j < table.degrees.length; j++) {
        let s = 0;
        for (const x of h) {
          const lam = field.pow(unity, lambda.get(x)!);
          const chi = table.values[j][g.classOf[g.inverse[x]]];
          s = field.add(s, field.mul(lam, chi));
        }
        const value = field.mul(s, invOrderH);
        if (value > index) {
          throw new Error("scalar product lift exceeded the subgroup index");
        }
        row.push(value);
      }
      const weighted = row.reduce((acc, x, j) => acc + x * table.degrees[j], 0);
      if (weighted !== index) {
        throw new Error(
          `row degree ${weighted} differs from index ${index} in ${g.name}`,
        );
      }
      const key = row.join(",");
      const existing = rowCounts.get(key);
      if (existing) {
        existing.count += 1;
        // keep the largest inducing subgroup for provenance
        if (h.length > existing.subgroupOrder) existing.subgroupOrder = h.length;
      } else {
        rowCounts.set(key, { row, subgroupOrder: h.length, count: 1 });
      }
    }
  }
  return [...rowCounts.values()].sort((a, b) => {
    const da = a.row.reduce((acc, x, j) => acc + x * table.degrees[j], 0);
    const db = b.row.reduce((acc, x, j) => acc + x * table.degrees[j], 0);
    if (da !== db) return da - db;
    const ka = a.row.join(",");
    const kb = b.row.join(",");
    return ka < kb ? -1 : ka > kb ? 1 : 0;
  });
}
