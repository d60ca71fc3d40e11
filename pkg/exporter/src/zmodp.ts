/** Arithmetic in F_p for a prime p < 2^26 (products stay exact doubles). */

import { isPrime } from "./group.js";

export class Fp {
  readonly p: number;
  private readonly root: number;

  constructor(p: number) {
    this.p = p;
    this.root = this.findPrimitiveRoot();
  }

  add(a: number, b: number): number {
    const s = a + b;
    return s >= this.p ? s - this.p : s;
  }

  sub(a: number, b: number): number {
    const s = a - b;
    return s < 0 ? s + this.p : s;
  }

  mul(a: number, b: number): number {
    return (a * b) % this.p;
  }

  pow(a: number, e: number): number {
    let result = 1;
    let base = a % this.p;
    let exp = e;
    while (exp > 0) {
      if (exp & 1) result = this.mul(result, base);
      base = this.mul(base, base);
      exp >>>= 1;
    }
    return result;
  }

  inv(a: number): number {
    if (a % this.p === 0) throw new Error("division by zero mod p");
    return this.pow(a, this.p - 2);
  }

  private findPrimitiveRoot(): number {
    const factors: number[] = [];
    let m = this.p - 1;
    for (let d = 2; d * d <= m; d++) {
      if (m % d === 0) {
        factors.push(d);
        while (m % d === 0) m /= d;
      }
    }
    if (m > 1) factors.push(m);
    for (let g = 2; g < this.p; g++) {
      if (factors.every((q) => this.pow(g, (this.p - 1) / q) !== 1)) {
        return g;
      }
    }
    throw new Error("no primitive root found");
  }

  /** canonical primitive n-th root of unity (n must divide p - 1) */
  rootOfUnity(n: number): number {
    if ((this.p - 1) % n !== 0) {
      throw new Error(`no ${n}-th roots of unity mod ${this.p}`);
    }
    return this.pow(this.root, (this.p - 1) / n);
  }
}

/** smallest prime p = 1 (mod modulus) with p > lowerBound */
export function splittingPrime(modulus: number, lowerBound: number): number {
  let p = modulus * Math.max(1, Math.ceil((lowerBound + 1) / modulus)) + 1;
  while (!isPrime(p)) p += modulus;
  return p;
}

/** kernel basis of a square/rectangular matrix over F_p (rows x cols) */
export function kernelBasis(field: Fp, rows: number[][], cols: number): number[][] {
  const m = rows.map((r) => [...r]);
  const pivotOfCol: number[] = new Array(cols).fill(-1);
  let rank = 0;
  for (let col = 0; col < cols && rank < m.length; col++) {
    let pivot = -1;
    for (let i = rank; i < m.length; i++) {
      if (m[i][col] !== 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    [m[rank], m[pivot]] = [m[pivot], m[rank]];
    const scale = field.inv(m[rank][col]);
    for (let j = 0; j < cols; j++) m[rank][j] = field.mul(m[rank][j], scale);
    for (let i = 0; i < m.length; i++) {
      if (i !== rank && m[i][col] !== 0) {
        const f = m[i][col];
        for (let j = 0; j < cols; j++) {
          m[i][j] = field.sub(m[i][j], field.mul(f, m[rank][j]));
        }
      }
    }
    pivotOfCol[col] = rank;
    rank++;
  }
  const basis: number[][] = [];
  for (let col = 0; col < cols; col++) {
    if (pivotOfCol[col] >= 0) continue;
    const v = new Array(cols).fill(0);
    v[col] = 1;
    for (let c = 0; c < cols; c++) {
      const r = pivotOfCol[c];
      if (r >= 0) v[c] = field.sub(0, m[r][col]);
    }
    basis.push(v);
  }
  return basis;
}

/** solve x (rows basis) = target over F_p; the basis rows must be independent */
export function solveInBasis(
  field: Fp,
  basis: number[][],
  target: number[],
): number[] {
  const k = basis.length;
  const cols = target.length;
  // augmented transpose system: sum x_i basis[i] = target
  const m: number[][] = [];
  for (let j = 0; j < cols; j++) {
    m.push([...basis.map((b) => b[j]), target[j]]);
  }
  let rank = 0;
  const where: number[] = new Array(k).fill(-1);
  for (let col = 0; col < k && rank < m.length; col++) {
    let pivot = -1;
    for (let i = rank; i < m.length; i++) {
      if (m[i][col] !== 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    [m[rank], m[pivot]] = [m[pivot], m[rank]];
    const scale = field.inv(m[rank][col]);
    for (let j = 0; j <= k; j++) m[rank][j] = field.mul(m[rank][j], scale);
    for (let i = 0; i < m.length; i++) {
      if (i !== rank && m[i][col] !== 0) {
        const f = m[i][col];
        for (let j = 0; j <= k; j++) {
          m[i][j] = field.sub(m[i][j], field.mul(f, m[rank][j]));
        }
      }
    }
    where[col] = rank;
    rank++;
  }
  const x = new Array(k).fill(0);
  for (let col = 0; col < k; col++) {
    if (where[col] >= 0) x[col] = m[where[col]][k];
  }
  for (let i = 0; i < m.length; i++) {
    const val = m[i].slice(0, k).reduce((acc, c, idx) => field.add(acc, field.mul(c, x[idx])), 0);
    if (val !== m[i][k]) throw new Error("inconsistent linear system");
  }
  return x;
}
