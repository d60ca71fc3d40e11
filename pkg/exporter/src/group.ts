/**
 * Finite groups as index tables.
 *
 * A group is built once from an element list with a composition
 * function; everything downstream (conjugacy classes, the subgroup
 * lattice up to conjugacy, normalizers) works on integer indices and
 * the dense multiplication table.  Element keys are sorted before
 * indexing, so the whole pipeline is deterministic for a fixed
 * constructor.
 */

export interface GroupInput<T> {
  name: string;
  elements: T[];
  key: (x: T) => string;
  compose: (a: T, b: T) => T;
}

export class Group {
  readonly name: string;
  readonly order: number;
  readonly table: Int32Array; // table[a * order + b] = index of a.b
  readonly inverse: Int32Array;
  readonly identity: number;
  readonly elementOrder: Int32Array;
  /** conjugacy classes: identity first, then (element order, size, min index) */
  readonly classes: number[][];
  readonly classOf: Int32Array;
  readonly classRep: number[];

  constructor(name: string, order: number, table: Int32Array) {
    this.name = name;
    this.order = order;
    this.table = table;

    let identity = -1;
    for (let e = 0; e < order; e++) {
      let ok = true;
      for (let x = 0; x < order; x++) {
        if (table[e * order + x] !== x || table[x * order + e] !== x) {
          ok = false;
          break;
        }
      }
      if (ok) {
        identity = e;
        break;
      }
    }
    if (identity < 0) throw new Error(`${name}: no identity element`);
    this.identity = identity;

    this.inverse = new Int32Array(order);
    for (let x = 0; x < order; x++) {
      for (let y = 0; y < order; y++) {
        if (table[x * order + y] === identity) {
          this.inverse[x] = y;
          break;
        }
      }
    }

    this.elementOrder = new Int32Array(order);
    for (let x = 0; x < order; x++) {
      let k = 1;
      let cur = x;
      while (cur !== identity) {
        cur = table[cur * order + x];
        k++;
      }
      this.elementOrder[x] = k;
    }

    const seen = new Uint8Array(order);
    const classes: number[][] = [];
    for (let x = 0; x < order; x++) {
      if (seen[x]) continue;
      const members = new Set<number>();
      for (let g = 0; g < order; g++) {
        members.add(this.conjugate(x, g));
      }
      const sorted = [...members].sort((a, b) => a - b);
      for (const m of sorted) seen[m] = 1;
      classes.push(sorted);
    }
    classes.sort((a, b) => {
      if (a.includes(identity)) return -1;
      if (b.includes(identity)) return 1;
      const oa = this.elementOrder[a[0]];
      const ob = this.elementOrder[b[0]];
      if (oa !== ob) return oa - ob;
      if (a.length !== b.length) return a.length - b.length;
      return a[0] - b[0];
    });
    this.classes = classes;
    this.classOf = new Int32Array(order);
    for (let c = 0; c < classes.length; c++) {
      for (const x of classes[c]) this.classOf[x] = c;
    }
    this.classRep = classes.map((c) => c[0]);
  }

  static fromElements<T>(input: GroupInput<T>): Group {
    const keyed = input.elements.map((x) => ({ x, k: input.key(x) }));
    keyed.sort((a, b) => (a.k < b.k ? -1 : a.k > b.k ? 1 : 0));
    const index = new Map<string, number>();
    keyed.forEach((e, i) => {
      if (index.has(e.k)) throw new Error(`${input.name}: duplicate element key ${e.k}`);
      index.set(e.k, i);
    });
    const n = keyed.length;
    const table = new Int32Array(n * n);
    for (let a = 0; a < n; a++) {
      for (let b = 0; b < n; b++) {
        const product = input.key(input.compose(keyed[a].x, keyed[b].x));
        const idx = index.get(product);
        if (idx === undefined) {
          throw new Error(`${input.name}: composition left the element set`);
        }
        table[a * n + b] = idx;
      }
    }
    return new Group(input.name, n, table);
  }

  static directProduct(a: Group, b: Group, name?: string): Group {
    const n = a.order * b.order;
    const table = new Int32Array(n * n);
    for (let x = 0; x < n; x++) {
      const xa = Math.floor(x / b.order);
      const xb = x % b.order;
      for (let y = 0; y < n; y++) {
        const ya = Math.floor(y / b.order);
        const yb = y % b.order;
        table[x * n + y] =
          a.table[xa * a.order + ya] * b.order + b.table[xb * b.order + yb];
      }
    }
    return new Group(name ?? `${a.name}x${b.name}`, n, table);
  }

  mul(a: number, b: number): number {
    return this.table[a * this.order + b];
  }

  conjugate(x: number, g: number): number {
    // g^-1 x g
    return this.mul(this.mul(this.inverse[g], x), g);
  }

  exponent(): number {
    let e = 1;
    for (let x = 0; x < this.order; x++) {
      e = lcm(e, this.elementOrder[x]);
    }
    return e;
  }

  /** closure of a set of generators, as a sorted index list */
  closure(generators: number[]): number[] {
    const seen = new Uint8Array(this.order);
    const items: number[] = [this.identity];
    seen[this.identity] = 1;
    for (const g of generators) {
      if (!seen[g]) {
        seen[g] = 1;
        items.push(g);
      }
    }
    const gens = generators.filter((g, i) => generators.indexOf(g) === i);
    for (let head = 0; head < items.length; head++) {
      const x = items[head];
      for (const g of gens) {
        const y = this.mul(x, g);
        if (!seen[y]) {
          seen[y] = 1;
          items.push(y);
        }
        const z = this.mul(g, x);
        if (!seen[z]) {
          seen[z] = 1;
          items.push(z);
        }
      }
    }
    return items.sort((p, q) => p - q);
  }
}

export function gcd(a: number, b: number): number {
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function lcm(a: number, b: number): number {
  return (a / gcd(a, b)) * b;
}

export interface SubgroupClass {
  /** sorted element indices of the class representative */
  rep: number[];
  /** number of conjugates */
  orbitSize: number;
  normal: boolean;
}

const keyOf = (sorted: number[]) => sorted.join(",");

/**
 * All subgroups up to conjugacy.
 *
 * Seeds: the trivial group, every cyclic subgroup, and every subgroup
 * generated by an element-class representative together with one more
 * element (catching perfect subgroups, which at these orders are all
 * 2-generated; any 2-generated subgroup is conjugate to such a seed).
 * Each discovered class representative is then extended: for every
 * element of its normalizer whose image in the quotient has prime
 * order, the union of the corresponding cosets is a subgroup one prime
 * step up.  Solvable subgroups all arise this way from below.
 */
export function subgroupClasses(g: Group): SubgroupClass[] {
  const known = new Map<string, number>(); // key -> class id
  const out: SubgroupClass[] = [];
  const queue: number[] = [];

  const register = (sorted: number[]): void => {
    const k = keyOf(sorted);
    if (known.has(k)) return;
    // conjugation orbit; representative = lexicographically least key
    const orbit = new Map<string, number[]>();
    for (let x = 0; x < g.order; x++) {
      const conj = sorted.map((h) => g.conjugate(h, x)).sort((p, q) => p - q);
      const ck = keyOf(conj);
      if (!orbit.has(ck)) orbit.set(ck, conj);
    }
    const keys = [...orbit.keys()].sort();
    const id = out.length;
    for (const ck of keys) known.set(ck, id);
    out.push({
      rep: orbit.get(keys[0])!,
      orbitSize: orbit.size,
      normal: orbit.size === 1,
    });
    queue.push(id);
  };

  register([g.identity]);
  for (let x = 0; x < g.order; x++) {
    register(g.closure([x]));
  }
  for (const rep of g.classRep) {
    for (let b = 0; b < g.order; b++) {
      register(g.closure([rep, b]));
    }
  }

  for (let head = 0; head < queue.length; head++) {
    const h = out[queue[head]].rep;
    if (h.length === g.order) continue;
    const inH = new Uint8Array(g.order);
    for (const x of h) inH[x] = 1;
    // normalizer elements
    const normalizer: number[] = [];
    for (let x = 0; x < g.order; x++) {
      let fixes = true;
      for (const y of h) {
        if (!inH[g.conjugate(y, x)]) {
          fixes = false;
          break;
        }
      }
      if (fixes) normalizer.push(x);
    }
    for (const x of normalizer) {
      if (inH[x]) continue;
      // order of xH in N/H
      let q = 1;
      let cur = x;
      while (!inH[cur]) {
        cur = g.mul(cur, x);
        q++;
      }
      if (!isPrime(q)) continue;
      const members = new Set<number>(h);
      let coset = x;
      for (let i = 1; i < q; i++) {
        for (const y of h) members.add(g.mul(y, coset));
        coset = g.mul(coset, x);
      }
      register([...members].sort((p, q2) => p - q2));
    }
  }
  out.sort((a, b) => a.rep.length - b.rep.length || keyOf(a.rep).localeCompare(keyOf(b.rep)));
  return out;
}

export function isPrime(n: number): boolean {
  if (n < 2) return false;
  for (let d = 2; d * d <= n; d++) {
    if (n % d === 0) return false;
  }
  return true;
}
