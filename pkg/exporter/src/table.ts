/**
 * Character table of a finite group modulo a splitting prime.
 *
 * Classic eigenvector method on the class algebra: the vectors
 * w = (|C_j| chi(g_j) / chi(1))_j are the common eigenvectors of the
 * class-sum multiplication matrices, which are computed by counting.
 * All linear algebra runs over F_p with p = 1 (mod exp(G)) and
 * p > 2|G|; degrees and the small nonnegative integers derived later
 * (scalar products, eigenvalue multiplicities) lift uniquely.
 *
 * The table is the image of the true complex table under one fixed
 * embedding of the cyclotomic field into F_p; which embedding is
 * unknown, and consumers are written so that the choice cancels (see
 * rows.ts).
 */

import { Group } from "./group.js";
import { Fp, kernelBasis, solveInBasis, splittingPrime } from "./zmodp.js";

export interface CharacterTable {
  field: Fp;
  group: Group;
  degrees: number[]; // exact integers
  /** values[i][c] = chi_i(class c) mod p, rows in canonical order */
  values: number[][];
}

export function characterTable(g: Group, forcedPrime?: number): CharacterTable {
  const r = g.classes.length;
  const exponent = g.exponent();
  const p = forcedPrime ?? splittingPrime(exponent, Math.max(2 * g.order, 1000));
  if ((p - 1) % exponent !== 0 || p <= 2 * g.order) {
    throw new Error(`prime ${p} is not a large splitting prime for ${g.name}`);
  }
  const field = new Fp(p);

  // class multiplication coefficients: a_ijk = m_jk |C_j| / |C_k| where
  // m_jk counts x in C_i with x * rep(C_j) in C_k
  const matrices: number[][][] = [];
  for (let i = 0; i < r; i++) {
    const m: number[][] = Array.from({ length: r }, () => new Array(r).fill(0));
    for (const x of g.classes[i]) {
      for (let j = 0; j < r; j++) {
        m[j][g.classOf[g.mul(x, g.classRep[j])]] += 1;
      }
    }
    for (let j = 0; j < r; j++) {
      for (let k = 0; k < r; k++) {
        const scaled = (m[j][k] * g.classes[j].length) / g.classes[k].length;
        if (!Number.isInteger(scaled)) {
          throw new Error("class constant scaling failed");
        }
        m[j][k] = scaled % p;
      }
    }
    matrices.push(m);
  }

  // split the coordinate space into common eigenspaces of all M_i
  let spaces: number[][][] = [
    Array.from({ length: r }, (_, i) => {
      const v = new Array(r).fill(0);
      v[i] = 1;
      return v;
    }),
  ];
  for (let i = 1; i < r; i++) {
    const next: number[][][] = [];
    for (const basis of spaces) {
      if (basis.length === 1) {
        next.push(basis);
        continue;
      }
      const images = basis.map((v) => applyMatrix(field, matrices[i], v));
      // coords(M v) = action^T coords(v); eigenvectors need ker of it
      const action = images.map((img) => solveInBasis(field, basis, img));
      const transposed = basis.map((_, a) => basis.map((_, b) => action[b][a]));
      let remaining = basis.length;
      for (let lam = 0; lam < p && remaining > 0; lam++) {
        const shifted = transposed.map((row, a) =>
          row.map((x, b) => (a === b ? field.sub(x, lam) : x)),
        );
        const kernel = kernelBasis(field, shifted, basis.length);
        if (kernel.length === 0) continue;
        const sub = kernel.map((coeffs) => {
          const v = new Array(r).fill(0);
          coeffs.forEach((c, idx) => {
            for (let j = 0; j < r; j++) {
              v[j] = field.add(v[j], field.mul(c, basis[idx][j]));
            }
          });
          return v;
        });
        next.push(sub);
        remaining -= kernel.length;
      }
      if (remaining !== 0) throw new Error("eigen decomposition incomplete");
    }
    spaces = next;
    if (spaces.every((s) => s.length === 1)) break;
  }
  if (!spaces.every((s) => s.length === 1)) {
    throw new Error("class algebra eigenvectors not separated");
  }

  const classSizes = g.classes.map((c) => c.length);
  const inverseClass = g.classes.map((_, j) => g.classOf[g.inverse[g.classRep[j]]]);
  const rows: { degree: number; values: number[] }[] = [];
  for (const [w0] of spaces) {
    const w = normalizeEigenvector(field, w0);
    // 1/d^2 = (1/|G|) sum_j w_j w_{j*} / |C_j|
    let s = 0;
    for (let j = 0; j < r; j++) {
      s = field.add(
        s,
        field.mul(field.mul(w[j], w[inverseClass[j]]), field.inv(classSizes[j] % p)),
      );
    }
    const dSquared = field.mul(g.order % p, field.inv(s));
    const d = exactSqrt(dSquared);
    if (d === null) throw new Error("degree lift failed");
    const values = w.map((wj, j) =>
      field.mul(field.mul(d % p, wj), field.inv(classSizes[j] % p)),
    );
    rows.push({ degree: d, values });
  }

  for (const a of rows) {
    for (const b of rows) {
      let s = 0;
      for (let j = 0; j < r; j++) {
        s = field.add(
          s,
          field.mul(classSizes[j] % p, field.mul(a.values[j], b.values[inverseClass[j]])),
        );
      }
      const expected = a === b ? g.order % p : 0;
      if (s !== expected) throw new Error("orthogonality check failed");
    }
  }
  const degreeSum = rows.reduce((acc, row) => acc + row.degree * row.degree, 0);
  if (degreeSum !== g.order) throw new Error("degree squares do not sum to |G|");

  // canonical row order: degree, then larger kernel first, then values;
  // the trivial character is pinned to the front
  const withKernel = rows.map((row) => {
    let kernel = 0;
    for (let c = 0; c < r; c++) {
      if (row.values[c] === row.degree % p) kernel += classSizes[c];
    }
    return { ...row, kernel };
  });
  withKernel.sort((a, b) => {
    if (a.degree !== b.degree) return a.degree - b.degree;
    if (a.kernel !== b.kernel) return b.kernel - a.kernel;
    for (let c = 0; c < r; c++) {
      if (a.values[c] !== b.values[c]) return a.values[c] - b.values[c];
    }
    return 0;
  });
  const trivialAt = withKernel.findIndex((row) => row.values.every((v) => v === 1));
  if (trivialAt < 0) throw new Error("trivial character missing");
  const [trivial] = withKernel.splice(trivialAt, 1);
  withKernel.unshift(trivial);

  return {
    field,
    group: g,
    degrees: withKernel.map((row) => row.degree),
    values: withKernel.map((row) => row.values),
  };
}

function applyMatrix(field: Fp, m: number[][], v: number[]): number[] {
  const r = v.length;
  const out = new Array(r).fill(0);
  for (let j = 0; j < r; j++) {
    let acc = 0;
    for (let k = 0; k < r; k++) {
      if (v[k] !== 0) acc = field.add(acc, field.mul(m[j][k], v[k]));
    }
    out[j] = acc;
  }
  return out;
}

function normalizeEigenvector(field: Fp, w: number[]): number[] {
  // coordinate of the identity class is omega(C_1) = 1
  if (w[0] === 0) throw new Error("eigenvector vanishes on the identity class");
  const scale = field.inv(w[0]);
  return w.map((x) => field.mul(x, scale));
}

function exactSqrt(n: number): number | null {
  const s = Math.round(Math.sqrt(n));
  for (const c of [s - 1, s, s + 1]) {
    if (c >= 0 && c * c === n) return c;
  }
  return null;
}

/**
 * Character table of a direct product as outer products of the factor
 * tables, rows in row-major pair order over the factors' canonical
 * orders (the ordering the product-verification contract requires).
 */
export function productTable(ab: Group, a: Group, b: Group): CharacterTable {
  const p = splittingPrime(ab.exponent(), Math.max(2 * ab.order, 1000));
  const field = new Fp(p);
  const ta = characterTable(a, p);
  const tb = characterTable(b, p);
  const classIndex = new Map<string, number>();
  ab.classes.forEach((cls, idx) => {
    const rep = cls[0];
    const ca = a.classOf[Math.floor(rep / b.order)];
    const cb = b.classOf[rep % b.order];
    classIndex.set(`${ca},${cb}`, idx);
  });
  const degrees: number[] = [];
  const values: number[][] = [];
  for (let i = 0; i < ta.degrees.length; i++) {
    for (let j = 0; j < tb.degrees.length; j++) {
      degrees.push(ta.degrees[i] * tb.degrees[j]);
      const row = new Array(ab.classes.length).fill(0);
      for (let ca = 0; ca < a.classes.length; ca++) {
        for (let cb = 0; cb < b.classes.length; cb++) {
          const idx = classIndex.get(`${ca},${cb}`);
          if (idx === undefined) throw new Error("product class bookkeeping failed");
          row[idx] = field.mul(ta.values[i][ca], tb.values[j][cb]);
        }
      }
      values.push(row);
    }
  }
  return { field, group: ab, degrees, values };
}
