/**
 * Named group constructors: cyclic and (alternating) symmetric groups,
 * matrix groups over small finite fields, and direct products via the
 * "AxB" spec syntax.
 */

import { Group } from "./group.js";

/** GF(q) for q = p^k with small fixed irreducible polynomials. */
class FiniteField {
  readonly q: number;
  private readonly addTable: number[][];
  private readonly mulTable: number[][];

  constructor(q: number) {
    this.q = q;
    const config: Record<number, { p: number; poly: number[] }> = {
      2: { p: 2, poly: [] },
      3: { p: 3, poly: [] },
      4: { p: 2, poly: [1, 1] }, // x^2 + x + 1
      5: { p: 5, poly: [] },
      7: { p: 7, poly: [] },
      8: { p: 2, poly: [1, 1, 0] }, // x^3 + x + 1
      9: { p: 3, poly: [1, 0] }, // x^2 + 1
    };
    const cfg = config[q];
    if (!cfg) throw new Error(`unsupported field size ${q}`);
    const { p, poly } = cfg;
    const k = poly.length ? poly.length : 1;
    if (p ** k !== q) throw new Error("field configuration inconsistent");
    const toVec = (x: number): number[] => {
      const v: number[] = [];
      for (let i = 0; i < k; i++) {
        v.push(x % p);
        x = Math.floor(x / p);
      }
      return v;
    };
    const fromVec = (v: number[]): number =>
      v.reduce((acc, c, i) => acc + c * p ** i, 0);
    this.addTable = [];
    this.mulTable = [];
    for (let a = 0; a < q; a++) {
      const addRow: number[] = [];
      const mulRow: number[] = [];
      const va = toVec(a);
      for (let b = 0; b < q; b++) {
        const vb = toVec(b);
        addRow.push(fromVec(va.map((x, i) => (x + vb[i]) % p)));
        // polynomial product reduced by the defining polynomial
        const prod = new Array(2 * k - 1).fill(0);
        for (let i = 0; i < k; i++) {
          for (let j = 0; j < k; j++) {
            prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p;
          }
        }
        for (let d = 2 * k - 2; d >= k; d--) {
          const c = prod[d];
          if (c) {
            prod[d] = 0;
            // x^k = -(poly), with poly listing the lower coefficients
            for (let i = 0; i < k; i++) {
              prod[d - k + i] = (prod[d - k + i] + c * (p - poly[i])) % p;
            }
          }
        }
        mulRow.push(fromVec(prod.slice(0, k)));
      }
      this.addTable.push(addRow);
      this.mulTable.push(mulRow);
    }
  }

  add(a: number, b: number): number {
    return this.addTable[a][b];
  }

  mul(a: number, b: number): number {
    return this.mulTable[a][b];
  }
}

type Mat2 = [number, number, number, number];

function matrixGroup(name: string, q: number, dets: "one" | "nonzero"): Group {
  const f = new FiniteField(q);
  const elements: Mat2[] = [];
  for (let a = 0; a < q; a++) {
    for (let b = 0; b < q; b++) {
      for (let c = 0; c < q; c++) {
        for (let d = 0; d < q; d++) {
          const det = f.add(f.mul(a, d), negInField(f, q, f.mul(b, c)));
          if (dets === "one" ? det === 1 : det !== 0) {
            elements.push([a, b, c, d]);
          }
        }
      }
    }
  }
  return Group.fromElements({
    name,
    elements,
    key: (m) => m.map((x) => String(x).padStart(2, "0")).join(""),
    compose: (m, n): Mat2 => [
      f.add(f.mul(m[0], n[0]), f.mul(m[1], n[2])),
      f.add(f.mul(m[0], n[1]), f.mul(m[1], n[3])),
      f.add(f.mul(m[2], n[0]), f.mul(m[3], n[2])),
      f.add(f.mul(m[2], n[1]), f.mul(m[3], n[3])),
    ],
  });
}

function negInField(f: FiniteField, q: number, x: number): number {
  for (let y = 0; y < q; y++) {
    if (f.add(x, y) === 0) return y;
  }
  throw new Error("no additive inverse");
}

function cyclic(n: number): Group {
  return Group.fromElements({
    name: `C${n}`,
    elements: Array.from({ length: n }, (_, i) => i),
    key: (x) => String(x).padStart(3, "0"),
    compose: (a, b) => (a + b) % n,
  });
}

function permutations(n: number): number[][] {
  if (n === 0) return [[]];
  const rest = permutations(n - 1);
  const out: number[][] = [];
  for (const p of rest) {
    for (let i = 0; i <= p.length; i++) {
      out.push([...p.slice(0, i), n - 1, ...p.slice(i)]);
    }
  }
  return out;
}

function parity(p: number[]): number {
  let swaps = 0;
  const seen = new Array(p.length).fill(false);
  for (let i = 0; i < p.length; i++) {
    if (seen[i]) continue;
    let j = i;
    let len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      len++;
    }
    swaps += len - 1;
  }
  return swaps % 2;
}

function symmetric(n: number, even: boolean): Group {
  const all = permutations(n).filter((p) => !even || parity(p) === 0);
  return Group.fromElements({
    name: even ? `A${n}` : `S${n}`,
    elements: all,
    key: (p) => p.join(""),
    compose: (p, q) => p.map((_, i) => p[q[i]]),
  });
}

const MAX_ORDER_DEFAULT = 600;

export function constructGroup(spec: string, maxOrder = MAX_ORDER_DEFAULT): Group {
  const trimmed = spec.trim();
  const productSplit = splitProduct(trimmed);
  let group: Group;
  if (productSplit) {
    const [left, right] = productSplit;
    group = Group.directProduct(
      constructGroup(left, maxOrder),
      constructGroup(right, maxOrder),
      trimmed,
    );
  } else if (trimmed === "trivial" || trimmed === "1") {
    group = cyclic(1);
  } else if (/^C\d+$/.test(trimmed)) {
    group = cyclic(Number(trimmed.slice(1)));
  } else if (/^S\d$/.test(trimmed)) {
    group = symmetric(Number(trimmed.slice(1)), false);
  } else if (/^A\d$/.test(trimmed)) {
    group = symmetric(Number(trimmed.slice(1)), true);
  } else if (/^SL\(2,\d+\)$/.test(trimmed)) {
    group = matrixGroup(trimmed, Number(trimmed.slice(5, -1)), "one");
  } else if (/^GL\(2,\d+\)$/.test(trimmed)) {
    group = matrixGroup(trimmed, Number(trimmed.slice(5, -1)), "nonzero");
  } else {
    throw new Error(`unknown group spec '${spec}'`);
  }
  if (group.order > maxOrder) {
    throw new Error(
      `group ${trimmed} has order ${group.order} above the cap ${maxOrder}`,
    );
  }
  return group;
}

/** split "AxB" on the LAST x that is not inside parentheses */
function splitProduct(spec: string): [string, string] | null {
  let depth = 0;
  for (let i = spec.length - 1; i > 0; i--) {
    const ch = spec[i];
    if (ch === ")") depth++;
    else if (ch === "(") depth--;
    else if (ch === "x" && depth === 0) {
      return [spec.slice(0, i), spec.slice(i + 1)];
    }
  }
  return null;
}

export function isDirectProductSpec(spec: string): [string, string] | null {
  return splitProduct(spec.trim());
}
