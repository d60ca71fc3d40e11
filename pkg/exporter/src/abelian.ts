/**
 * Linear characters of a subgroup: abelianization, cyclic basis
 * decomposition and the full character list as exponent maps.
 */

import { Group } from "./group.js";

export interface LinearCharacters {
  /** conductor: exponent of the abelianization */
  conductor: number;
  /** one entry per character: exponent of zeta_conductor at each subgroup element */
  characters: Map<number, number>[];
}

interface AbelianGroup {
  size: number;
  mul: (a: number, b: number) => number;
  identity: number;
  elements: number[];
}

function quotientByCyclic(q: AbelianGroup, generator: number): {
  quotient: AbelianGroup;
  project: Map<number, number>;
} {
  const sub = new Set<number>();
  let cur = q.identity;
  do {
    sub.add(cur);
    cur = q.mul(cur, generator);
  } while (cur !== q.identity);
  const cosetOf = new Map<number, number>();
  for (const x of q.elements) {
    if (cosetOf.has(x)) continue;
    const members = [...sub].map((s) => q.mul(x, s));
    const rep = Math.min(...members);
    for (const m of members) cosetOf.set(m, rep);
  }
  const reps = [...new Set(cosetOf.values())].sort((a, b) => a - b);
  const repIndex = new Map(reps.map((r, i) => [r, i]));
  const project = new Map<number, number>();
  for (const x of q.elements) project.set(x, repIndex.get(cosetOf.get(x)!)!);
  const quotient: AbelianGroup = {
    size: reps.length,
    identity: project.get(q.identity)!,
    elements: reps.map((_, i) => i),
    mul: (a, b) => project.get(q.mul(reps[a], reps[b]))!,
  };
  return { quotient, project };
}

function orderIn(q: AbelianGroup, x: number): number {
  let k = 1;
  let cur = x;
  while (cur !== q.identity) {
    cur = q.mul(cur, x);
    k++;
  }
  return k;
}

/**
 * Basis of a finite abelian group: generators b_i of orders n_i with
 * every element a unique product b_1^e1 ... b_k^ek and n_{i+1} | n_i.
 *
 * Recursive maximal-order peeling; a lift b of a quotient basis element
 * of order m is corrected by a power of the peeled generator so that
 * b^m = 1 (possible because m divides the exponent).
 */
function abelianBasis(q: AbelianGroup): { generator: number; order: number }[] {
  if (q.size === 1) return [];
  let best = q.identity;
  let bestOrder = 1;
  for (const x of q.elements) {
    const o = orderIn(q, x);
    if (o > bestOrder) {
      best = x;
      bestOrder = o;
    }
  }
  const { quotient, project } = quotientByCyclic(q, best);
  const rest = abelianBasis(quotient);
  const lifted: { generator: number; order: number }[] = [
    { generator: best, order: bestOrder },
  ];
  const powers: number[] = [];
  let cur = q.identity;
  for (let i = 0; i < bestOrder; i++) {
    powers.push(cur);
    cur = q.mul(cur, best);
  }
  for (const { generator: gBar, order: m } of rest) {
    // find a lift whose image is gBar
    const lift = q.elements.find((x) => project.get(x) === gBar)!;
    let liftPow = q.identity;
    for (let i = 0; i < m; i++) liftPow = q.mul(liftPow, lift);
    // lift^m lies in <best>: lift^m = best^d with m | d, so multiplying
    // the lift by best^c with c*m = -d (mod n1) kills the m-th power
    const d = powers.indexOf(liftPow);
    if (d < 0) throw new Error("abelian basis lift failed");
    if (d % m !== 0) throw new Error("abelian basis divisibility failed");
    const c = (bestOrder - d / m) % (bestOrder / m);
    let corrected = lift;
    for (let i = 0; i < c; i++) corrected = q.mul(corrected, best);
    lifted.push({ generator: corrected, order: m });
  }
  return lifted;
}

/** all linear characters of the subgroup (given as sorted element indices) */
export function linearCharacters(g: Group, subgroup: number[]): LinearCharacters {
  const inSub = new Set(subgroup);
  // derived subgroup: closure of all commutators
  const commutators = new Set<number>();
  for (const a of subgroup) {
    for (const b of subgroup) {
      const comm = g.mul(g.mul(g.inverse[a], g.inverse[b]), g.mul(a, b));
      commutators.add(comm);
    }
  }
  const derived = g.closure([...commutators]);
  for (const d of derived) {
    if (!inSub.has(d)) throw new Error("derived subgroup left the subgroup");
  }

  // cosets of the derived subgroup inside the subgroup
  const cosetOf = new Map<number, number>();
  for (const x of subgroup) {
    if (cosetOf.has(x)) continue;
    const members = derived.map((d) => g.mul(x, d));
    const rep = Math.min(...members);
    for (const m of members) cosetOf.set(m, rep);
  }
  const reps = [...new Set(cosetOf.values())].sort((a, b) => a - b);
  const repIndex = new Map(reps.map((r, i) => [r, i]));
  const quotient: AbelianGroup = {
    size: reps.length,
    identity: repIndex.get(cosetOf.get(g.identity)!)!,
    elements: reps.map((_, i) => i),
    mul: (a, b) => repIndex.get(cosetOf.get(g.mul(reps[a], reps[b]))!)!,
  };

  const basis = abelianBasis(quotient);
  const conductor = basis.length ? basis[0].order : 1;
  // coordinates of every quotient element over the basis
  const coords = new Map<number, number[]>();
  coords.set(quotient.identity, basis.map(() => 0));
  const frontier = [quotient.identity];
  while (frontier.length) {
    const x = frontier.pop()!;
    const cx = coords.get(x)!;
    basis.forEach((b, i) => {
      if (cx[i] + 1 < b.order) {
        const y = quotient.mul(x, b.generator);
        if (!coords.has(y)) {
          const cy = [...cx];
          cy[i] += 1;
          coords.set(y, cy);
          frontier.push(y);
        }
      }
    });
  }
  if (coords.size !== quotient.size) {
    throw new Error("abelian basis does not span the quotient");
  }

  const characters: Map<number, number>[] = [];
  const tuples: number[][] = [[]];
  const expanded = basis.reduce(
    (acc, b) => acc.flatMap((t) => Array.from({ length: b.order }, (_, a) => [...t, a])),
    tuples,
  );
  for (const a of expanded) {
    const chi = new Map<number, number>();
    for (const x of subgroup) {
      const q = repIndex.get(cosetOf.get(x)!)!;
      const e = coords.get(q)!;
      let exponent = 0;
      basis.forEach((b, i) => {
        exponent = (exponent + a[i] * e[i] * (conductor / b.order)) % conductor;
      });
      chi.set(x, exponent);
    }
    characters.push(chi);
  }
  if (characters.length !== quotient.size) {
    throw new Error("wrong number of linear characters");
  }
  return { conductor, characters };
}
