/**
 * Dataset assembly: schema version 1, matching the analysis library's
 * parser.  Tiers beyond the induced rows are optional.
 */

import { constructGroup, isDirectProductSpec } from "./constructors.js";
import { Group, subgroupClasses } from "./group.js";
import { inducedRows } from "./rows.js";
import { CharacterTable, characterTable, productTable } from "./table.js";

export interface ExportRequest {
  spec: string;
  tiers: Set<string>; // of: classes, quotients, supertheories, values
  maxOrder?: number;
}

export const ALL_TIERS = ["classes", "quotients", "supertheories", "values"];

export function exportGroup(request: ExportRequest): object {
  const product = isDirectProductSpec(request.spec);
  const g = constructGroup(request.spec, request.maxOrder);
  let table: CharacterTable;
  if (product) {
    // product tables are ordered by row-major irreducible pairs, the
    // ordering the product-verification contract expects
    const a = constructGroup(product[0], request.maxOrder);
    const b = constructGroup(product[1], request.maxOrder);
    table = productTable(g, a, b);
  } else {
    table = characterTable(g);
  }
  const rows = inducedRows(table);

  const doc: Record<string, unknown> = {
    schema_version: 1,
    group: { name: g.name, order: g.order },
    irr: table.degrees.map((d, j) => ({ label: `chi${j + 1}`, degree: d })),
    induced_rows: rows.map((r) => {
      const entry: Record<string, unknown> = {
        row: r.row,
        subgroup_order: r.subgroupOrder,
      };
      if (r.count !== 1) entry.count = r.count;
      return entry;
    }),
  };

  if (request.tiers.has("classes")) {
    doc.classes = table.group.classes.map((c) => c.length);
  }
  if (request.tiers.has("quotients")) {
    doc.quotients = quotientTier(table);
  }
  if (request.tiers.has("supertheories")) {
    doc.supertheories = supertheoryTier(table);
  }
  if (request.tiers.has("values")) {
    doc.char_values = valueTier(table);
  }
  return doc;
}

/** 1-based indices of the irreducibles trivial on each proper normal subgroup */
function quotientTier(table: CharacterTable): object[] {
  const g = table.group;
  const out: object[] = [];
  const p = table.field.p;
  let counter = 0;
  for (const cls of subgroupClasses(g)) {
    if (!cls.normal || cls.rep.length === 1 || cls.rep.length === g.order) continue;
    const kernelIndices: number[] = [];
    for (let j = 0; j < table.degrees.length; j++) {
      const d = table.degrees[j] % p;
      if (cls.rep.every((n) => table.values[j][g.classOf[n]] === d)) {
        kernelIndices.push(j + 1);
      }
    }
    counter += 1;
    out.push({
      name: `N${cls.rep.length}_${counter}`,
      kernel_indices: kernelIndices,
    });
  }
  return out;
}

function supertheoryTier(table: CharacterTable): object[] {
  const r = table.degrees.length;
  const nClasses = table.group.classes.length;
  const singletons = Array.from({ length: r }, (_, j) => [j + 1]);
  const classSingletons = Array.from({ length: nClasses }, (_, c) => [c + 1]);
  const theories: object[] = [
    {
      name: "classical",
      blocks: singletons,
      superclasses: classSingletons,
    },
  ];
  if (r > 1) {
    theories.push({
      name: "maximal",
      blocks: [[1], Array.from({ length: r - 1 }, (_, j) => j + 2)],
      superclasses: [[1], Array.from({ length: nClasses - 1 }, (_, c) => c + 2)],
    });
  }
  return theories;
}

/**
 * Exact cyclotomic coordinates of every character value.
 *
 * For a class representative g of order o, the eigenvalue multiplicity
 * of zeta_o^k in the underlying representation is
 * (1/o) sum_t chi(g^t) zeta_o^(-kt); computed mod p it lifts exactly
 * (multiplicities are bounded by the degree).  Coordinates are then
 * rebased to the group exponent.
 */
function valueTier(table: CharacterTable): object {
  const g = table.group;
  const field = table.field;
  const conductor = g.exponent();
  const values: number[][][] = [];
  for (let j = 0; j < table.degrees.length; j++) {
    const perClass: number[][] = [];
    for (let c = 0; c < g.classes.length; c++) {
      const rep = g.classRep[c];
      const o = g.elementOrder[rep];
      const zeta = field.rootOfUnity(o);
      const invO = field.inv(o % field.p);
      const coords = new Array(conductor).fill(0);
      // chi values along the cyclic group generated by the representative
      const powerValues: number[] = [];
      let cur = g.identity;
      for (let t = 0; t < o; t++) {
        powerValues.push(table.values[j][g.classOf[cur]]);
        cur = g.mul(cur, rep);
      }
      for (let k = 0; k < o; k++) {
        let s = 0;
        for (let t = 0; t < o; t++) {
          const w = field.pow(zeta, (o - ((k * t) % o)) % o);
          s = field.add(s, field.mul(powerValues[t], w));
        }
        const m = field.mul(s, invO);
        if (m > table.degrees[j]) {
          throw new Error("eigenvalue multiplicity lift failed");
        }
        coords[(k * (conductor / o)) % conductor] += m;
      }
      const total = coords.reduce((a, b) => a + b, 0);
      if (total !== table.degrees[j]) {
        throw new Error("eigenvalue multiplicities do not sum to the degree");
      }
      perClass.push(coords);
    }
    values.push(perClass);
  }
  return { conductor, values };
}
