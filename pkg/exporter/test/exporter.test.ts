import { execFileSync } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, test } from "vitest";

import { linearCharacters } from "../src/abelian.js";
import { constructGroup } from "../src/constructors.js";
import { subgroupClasses } from "../src/group.js";
import { exportGroup } from "../src/export.js";
import { inducedRows } from "../src/rows.js";
import { characterTable } from "../src/table.js";

describe("group construction", () => {
  test("orders and conjugacy class counts", () => {
    const expectations: [string, number, number][] = [
      ["trivial", 1, 1],
      ["C6", 6, 6],
      ["S3", 6, 3],
      ["A4", 12, 4],
      ["S4", 24, 5],
      ["A5", 60, 5],
      ["SL(2,3)", 24, 7],
      ["GL(2,3)", 48, 8],
      ["SL(2,4)", 60, 5],
      ["SL(2,8)", 504, 9],
      ["S3xS3", 36, 9],
    ];
    for (const [spec, order, classes] of expectations) {
      const g = constructGroup(spec);
      expect(g.order, spec).toBe(order);
      expect(g.classes.length, spec).toBe(classes);
    }
  });

  test("order cap enforced", () => {
    expect(() => constructGroup("SL(2,8)", 100)).toThrow(/cap/);
  });

  test("subgroup lattices match known counts", () => {
    const expectations: [string, number, number][] = [
      ["S3", 4, 6],
      ["A4", 5, 10],
      ["S4", 11, 30],
      ["A5", 9, 59],
      ["SL(2,3)", 7, 15],
      ["A6", 22, 501],
      ["SL(2,8)", 12, 386],
    ];
    for (const [spec, classCount, total] of expectations) {
      const classes = subgroupClasses(constructGroup(spec));
      expect(classes.length, spec).toBe(classCount);
      expect(
        classes.reduce((acc, c) => acc + c.orbitSize, 0),
        spec,
      ).toBe(total);
    }
  });
});

describe("character tables", () => {
  test("degree patterns", () => {
    const expectations: [string, number[]][] = [
      ["S3", [1, 1, 2]],
      ["A4", [1, 1, 1, 3]],
      ["S4", [1, 1, 2, 3, 3]],
      ["A5", [1, 3, 3, 4, 5]],
      ["SL(2,3)", [1, 1, 1, 2, 2, 2, 3]],
      ["GL(2,3)", [1, 1, 2, 2, 2, 3, 3, 4]],
      ["A6", [1, 5, 5, 8, 8, 9, 10]],
      ["SL(2,8)", [1, 7, 7, 7, 7, 8, 9, 9, 9]],
    ];
    for (const [spec, degrees] of expectations) {
      expect(characterTable(constructGroup(spec)).degrees, spec).toEqual(degrees);
    }
  });

  test("linear characters are homomorphisms", () => {
    const g = constructGroup("S4");
    for (const cls of subgroupClasses(g)) {
      const { conductor, characters } = linearCharacters(g, cls.rep);
      for (const chi of characters) {
        for (const a of cls.rep) {
          for (const b of cls.rep) {
            const lhs = chi.get(g.mul(a, b))!;
            const rhs = (chi.get(a)! + chi.get(b)!) % conductor;
            expect(lhs).toBe(rhs);
          }
        }
      }
    }
  });
});

describe("induced rows", () => {
  test("S3 rows match the hand computation", () => {
    const table = characterTable(constructGroup("S3"));
    const rows = inducedRows(table);
    const multiset = rows
      .flatMap((r) => Array.from({ length: r.count }, () => r.row.join(",")))
      .sort();
    expect(multiset).toEqual(
      ["1,0,0", "0,1,0", "1,1,2", "1,0,1", "0,1,1", "1,1,0", "0,0,1", "0,0,1"].sort(),
    );
  });

  test("row degrees equal subgroup indices for the double cover", () => {
    const table = characterTable(constructGroup("SL(2,3)"));
    for (const r of inducedRows(table)) {
      const weighted = r.row.reduce((acc, x, j) => acc + x * table.degrees[j], 0);
      expect(weighted).toBe(table.group.order / r.subgroupOrder);
    }
  });
});

describe("dataset export", () => {
  test("schema shape and tiers", () => {
    const doc = exportGroup({
      spec: "A4",
      tiers: new Set(["classes", "quotients", "supertheories", "values"]),
    }) as Record<string, any>;
    expect(doc.schema_version).toBe(1);
    expect(doc.irr[0].degree).toBe(1);
    expect(doc.classes.reduce((a: number, b: number) => a + b, 0)).toBe(12);
    expect(doc.quotients.length).toBe(1); // the Klein four-group
    expect(doc.quotients[0].kernel_indices).toEqual([1, 2, 3]);
    expect(doc.supertheories.map((t: any) => t.name)).toEqual([
      "classical",
      "maximal",
    ]);
    expect(doc.char_values.values.length).toBe(4);
  });

  test("trivial group exports the single unit row", () => {
    const doc = exportGroup({ spec: "trivial", tiers: new Set() }) as any;
    expect(doc.irr.length).toBe(1);
    expect(doc.induced_rows).toEqual([{ row: [1], subgroup_order: 1 }]);
  });
});

function pythonHilbert(doc: object): string[] {
  const dir = mkdtempSync(join(tmpdir(), "charmonoid-export-"));
  const path = join(dir, "dataset.json");
  writeFileSync(path, JSON.stringify(doc) + "\n");
  const out = execFileSync(
    "python3",
    ["-m", "charmonoid.cli", "--format", "json", "hilbert", path],
    { encoding: "utf-8" },
  );
  return JSON.parse(out)[0].hilbert_basis;
}

describe("fidelity against the analysis library", () => {
  test("SL(2,3) minimal generators match the eight golden monomials", () => {
    const doc = exportGroup({ spec: "SL(2,3)", tiers: new Set() });
    expect(pythonHilbert(doc)).toEqual([
      "x1",
      "x2",
      "x3",
      "x7",
      "x4x5",
      "x4x6",
      "x5x6",
      "x4x5x6",
    ]);
  });

  test("A6 minimal generators match the sixteen golden monomials", () => {
    const doc = exportGroup({ spec: "A6", tiers: new Set() });
    const expected = [
      "x1",
      "x1x2",
      "x1x2x6",
      "x1x3",
      "x1x3x6",
      "x1x6",
      "x2x3",
      "x2x3x4x5^2x6^2x7^2",
      "x2x3x4^2x5x6^2x7^2",
      "x2x4x5x6",
      "x2x7",
      "x3x4x5x6",
      "x3x7",
      "x4x5x7^2",
      "x4x5x6x7^2",
      "x7",
    ];
    expect([...pythonHilbert(doc)].sort()).toEqual(expected.sort());
  });
});

describe("determinism", () => {
  test("re-export is byte-identical", () => {
    const tiers = new Set(["classes", "quotients", "supertheories"]);
    const first = JSON.stringify(exportGroup({ spec: "SL(2,3)", tiers }));
    const second = JSON.stringify(exportGroup({ spec: "SL(2,3)", tiers }));
    expect(second).toBe(first);
  });
});

describe("outer products against the exporter oracle", () => {
  test("SL(2,3) x S3 dataset matches the factor outer products", () => {
    const dir = mkdtempSync(join(tmpdir(), "charmonoid-prod-"));
    const tiers = new Set<string>();
    for (const [spec, file] of [
      ["SL(2,3)", "a.json"],
      ["S3", "b.json"],
      ["SL(2,3)xS3", "ab.json"],
    ] as const) {
      writeFileSync(join(dir, file), JSON.stringify(exportGroup({ spec, tiers })) + "\n");
    }
    const out = execFileSync(
      "python3",
      [
        "-m",
        "charmonoid.cli",
        "--format",
        "json",
        "product-check",
        join(dir, "a.json"),
        join(dir, "b.json"),
        join(dir, "ab.json"),
      ],
      { encoding: "utf-8" },
    );
    expect(JSON.parse(out)["monoids equal"]).toBe(true);
  }, 120000);
});
