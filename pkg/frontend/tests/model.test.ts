import { describe, expect, it } from 'vitest';

import {
  diskDirection,
  optionViews,
  prettyTicker,
  projectionChoices,
  renderBoard,
  tickerEntry,
  tickerWord,
} from '../src/model.js';

const placementB = {
  stage: '101000',
  pegs: [2, 1, 0, 2, 2, 2],
  faces: 'AB_ABB',
  hand: 3,
  all_off: false,
};

describe('renderBoard', () => {
  it('renders the six-disk figure state', () => {
    const view = renderBoard(placementB);
    expect(view.ok).toBe(true);
    expect(view.hand.map((d) => d.disk)).toEqual([3]);
    // disks 1..6 minus the held disk distribute over the pegs
    expect(view.pegs[2].map((d) => d.disk)).toEqual([1, 4, 5, 6]);
    expect(view.pegs[1].map((d) => d.disk)).toEqual([2]);
    expect(view.pegs[0]).toEqual([]);
    const disk6 = view.pegs[2][3];
    expect(disk6.face).toBe('black');
    expect(view.pegs[2][0].face).toBe('white');
  });

  it('renders the base state with the whole stack in hand', () => {
    const view = renderBoard({
      stage: '000',
      pegs: [0, 0, 0],
      faces: '_AA',
      hand: 1,
      all_off: true,
    });
    expect(view.ok).toBe(true);
    expect(view.pegs.flat()).toEqual([]);
    expect(view.hand.map((d) => d.disk)).toEqual([1, 2, 3]);
  });

  it('ignores unknown fields', () => {
    const view = renderBoard({ ...placementB, futureField: 42 });
    expect(view.ok).toBe(true);
  });

  it('falls back safely on malformed input', () => {
    expect(renderBoard(null).ok).toBe(false);
    expect(renderBoard('nope').ok).toBe(false);
    expect(renderBoard({ stage: '01' }).ok).toBe(false);
    expect(renderBoard({ ...placementB, pegs: [9, 1, 0, 2, 2, 2] }).ok).toBe(false);
    expect(renderBoard({ ...placementB, hand: 7 }).ok).toBe(false);
  });

  it('assigns alternating running directions from the largest disk', () => {
    expect(diskDirection(1)).toBe('left');
    expect(diskDirection(2)).toBe('right');
    const view = renderBoard(placementB);
    expect(view.hand[0].direction).toBe('left'); // disk 3
  });
});

describe('ticker', () => {
  it('maps compact letters to base and sign', () => {
    expect(tickerEntry('x')).toEqual({ letter: 'x', base: 'x', sign: 1 });
    expect(tickerEntry('Y')).toEqual({ letter: 'Y', base: 'y', sign: -1 });
    expect(() => tickerEntry('q')).toThrow();
  });

  it('round-trips the compact word and pretty form', () => {
    const entries = 'xyxxxYxxyy'.split('').map(tickerEntry);
    expect(tickerWord(entries)).toBe('xyxxxYxxyy');
    expect(prettyTicker(entries)).toBe(
      'x⁺y⁺x⁺x⁺x⁺y⁻x⁺x⁺y⁺y⁺',
    );
  });
});

describe('options and projection choices', () => {
  it('keeps all four options enabled with display metadata', () => {
    const views = optionViews([
      { letter: 'x', label: 'x', sign: 1, leading_disk: 3, advances: true, state: placementB },
      { letter: 'X', label: 'x', sign: -1, leading_disk: 3, advances: false, state: placementB },
      { letter: 'y', label: 'y', sign: 1, leading_disk: 3, advances: true, state: placementB },
      { letter: 'Y', label: 'y', sign: -1, leading_disk: 3, advances: false, state: placementB },
    ]);
    expect(views).toHaveLength(4);
    expect(views.every((v) => v.enabled)).toBe(true);
    expect(views[2].title).toContain('flipping');
    expect(views[1].title).toContain('backtrack');
  });

  it('offers projections from every observer count down to two', () => {
    expect(projectionChoices(5)).toEqual([5, 4, 3, 2]);
    expect(projectionChoices(2)).toEqual([2]);
    expect(projectionChoices(1)).toEqual([]);
  });
});
