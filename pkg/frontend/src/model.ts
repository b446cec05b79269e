// Pure view-model derivation; no DOM, no network. Everything the board
// shows is computed from server responses, never from re-implemented
// game rules (the one exception: the fixed running-direction arrows).

import type { MoveOption, StateOut } from './api.js';

export type Face = 'white' | 'black';

export interface DiskView {
  disk: number; // 1 = largest
  width: number; // 1..n, purely visual
  face: Face;
  direction: 'left' | 'right';
}

export interface BoardView {
  ok: boolean;
  note: string;
  pegs: DiskView[][]; // bottom to top, for pegs 0,1,2
  hand: DiskView[]; // bottom to top; whole stack during the off-board state
  stage: string;
}

export interface TickerEntry {
  letter: string; // compact char: x X y Y
  base: 'x' | 'y';
  sign: 1 | -1;
}

const FACE_OF: Record<string, Face> = { A: 'white', B: 'black' };

export function diskDirection(disk: number): 'left' | 'right' {
  // the largest disk runs left; directions alternate from there
  return disk % 2 === 1 ? 'left' : 'right';
}

function diskView(disk: number, nDisks: number, faceChar: string): DiskView {
  return {
    disk,
    width: nDisks - disk + 1,
    face: FACE_OF[faceChar] ?? 'white',
    direction: diskDirection(disk),
  };
}

export function renderBoard(state: unknown): BoardView {
  const fallback: BoardView = { ok: false, note: 'malformed state', pegs: [[], [], []], hand: [], stage: '' };
  if (typeof state !== 'object' || state === null) return fallback;
  const s = state as Partial<StateOut>;
  if (
    typeof s.stage !== 'string' ||
    !Array.isArray(s.pegs) ||
    typeof s.faces !== 'string' ||
    typeof s.hand !== 'number'
  ) {
    return fallback;
  }
  const n = s.pegs.length;
  if (s.faces.length !== n || s.hand < 1 || s.hand > n) return fallback;
  const pegs: DiskView[][] = [[], [], []];
  const hand: DiskView[] = [];
  if (s.all_off) {
    // base state: the whole stack is held on the largest disk
    for (let disk = 1; disk <= n; disk++) {
      hand.push(diskView(disk, n, disk === s.hand ? '_' : s.faces[disk - 1]));
    }
  } else {
    for (let disk = 1; disk <= n; disk++) {
      const view = diskView(disk, n, s.faces[disk - 1]);
      if (disk === s.hand) {
        hand.push(view);
      } else {
        const peg = s.pegs[disk - 1];
        if (peg !== 0 && peg !== 1 && peg !== 2) return fallback;
        pegs[peg].push(view);
      }
    }
  }
  return { ok: true, note: '', pegs, hand, stage: s.stage };
}

export function tickerEntry(letter: string): TickerEntry {
  const base = letter.toLowerCase() as 'x' | 'y';
  if (base !== 'x' && base !== 'y') throw new Error(`bad letter ${letter}`);
  return { letter, base, sign: letter === base ? 1 : -1 };
}

export function tickerWord(entries: TickerEntry[]): string {
  return entries.map((e) => e.letter).join('');
}

export function prettyTicker(entries: TickerEntry[]): string {
  return entries
    .map((e) => e.base + (e.sign > 0 ? '⁺' : '⁻'))
    .join('');
}

export interface OptionView {
  letter: string;
  base: 'x' | 'y';
  sign: 1 | -1;
  advances: boolean;
  leadingDisk: number;
  title: string;
  enabled: boolean;
}

export function optionViews(options: MoveOption[]): OptionView[] {
  return options.map((o) => ({
    letter: o.letter,
    base: (o.label === 'y' ? 'y' : 'x') as 'x' | 'y',
    sign: (o.sign > 0 ? 1 : -1) as 1 | -1,
    advances: o.advances,
    leadingDisk: o.leading_disk,
    title:
      (o.advances ? 'advance' : 'backtrack') +
      (o.label === 'y' ? ', flipping' : ', colors matching') +
      ` (leading disk ${o.leading_disk})`,
    enabled: true,
  }));
}

export function projectionChoices(disks: number): number[] {
  const out: number[] = [];
  for (let m = disks; m >= 2; m--) out.push(m);
  return out;
}
