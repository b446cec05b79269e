// DOM rendering of the view state; the only file that touches document.

import { GameController, ViewState } from './controller.js';
import { DiskView, prettyTicker, projectionChoices, tickerWord } from './model.js';

function el(tag: string, cls: string, text = ''): HTMLElement {
  const node = document.createElement(tag);
  node.className = cls;
  if (text) node.textContent = text;
  return node;
}

function diskNode(d: DiskView, held = false): HTMLElement {
  const node = el('div', `disk ${d.face}${held ? ' held' : ''}`);
  node.style.width = `${24 + d.width * 16}px`;
  node.textContent = `${d.direction === 'left' ? '←' : ''}${d.disk}${
    d.direction === 'right' ? '→' : ''
  }`;
  node.title = `disk ${d.disk}, ${d.face} side up, runs ${d.direction}`;
  return node;
}

export function mount(root: HTMLElement, controller: GameController): void {
  const boardBox = el('div', 'board');
  const handBox = el('div', 'hand');
  const optionsBox = el('div', 'options');
  const tickerBox = el('div', 'ticker');
  const projBox = el('div', 'projection');
  const errorBox = el('div', 'error');
  const controls = el('div', 'controls');

  const diskSelect = document.createElement('select');
  for (let n = 1; n <= 12; n++) {
    const opt = document.createElement('option');
    opt.value = String(n);
    opt.textContent = `${n} disks`;
    if (n === 3) opt.selected = true;
    diskSelect.appendChild(opt);
  }
  const newBtn = el('button', 'new', 'new game') as HTMLButtonElement;
  newBtn.onclick = () => controller.newGame(Number(diskSelect.value));
  const undoBtn = el('button', 'undo', 'undo') as HTMLButtonElement;
  undoBtn.onclick = () => controller.undo();
  controls.append(diskSelect, newBtn, undoBtn);

  root.append(controls, handBox, boardBox, optionsBox, tickerBox, projBox, errorBox);

  controller.onChange((state: ViewState) => {
    render(state);
  });

  function render(state: ViewState): void {
    boardBox.textContent = '';
    for (let p = 0; p < 3; p++) {
      const peg = el('div', 'peg');
      peg.appendChild(el('div', 'peg-label', `peg ${p}`));
      const stack = state.board.pegs[p];
      for (let i = stack.length - 1; i >= 0; i--) {
        peg.appendChild(diskNode(stack[i]));
      }
      boardBox.appendChild(peg);
    }
    handBox.textContent = '';
    handBox.appendChild(el('span', 'hand-label', 'in hand: '));
    for (let i = state.board.hand.length - 1; i >= 0; i--) {
      handBox.appendChild(diskNode(state.board.hand[i], true));
    }
    if (!state.board.ok) {
      handBox.appendChild(el('span', 'note', state.board.note));
    }

    optionsBox.textContent = '';
    for (const opt of state.options) {
      const btn = el(
        'button',
        `move ${opt.base} ${opt.sign > 0 ? 'plus' : 'minus'}`,
        `${opt.base}${opt.sign > 0 ? '⁺' : '⁻'}`,
      ) as HTMLButtonElement;
      btn.title = opt.title;
      btn.disabled = !opt.enabled;
      btn.onclick = () => controller.submitMove(opt);
      optionsBox.appendChild(btn);
    }

    tickerBox.textContent = '';
    tickerBox.appendChild(el('span', 'ticker-label', 'word: '));
    tickerBox.appendChild(
      el('span', 'ticker-word', prettyTicker(state.ticker) || '∅'),
    );
    tickerBox.appendChild(el('span', 'ticker-compact', ` [${tickerWord(state.ticker)}]`));

    projBox.textContent = '';
    projBox.appendChild(el('span', 'proj-label', 'observer of '));
    const sel = document.createElement('select');
    for (const m of projectionChoices(state.disks)) {
      const opt = document.createElement('option');
      opt.value = String(m);
      opt.textContent = `${m} largest disks`;
      if (m === state.projectionLevel) opt.selected = true;
      sel.appendChild(opt);
    }
    sel.onchange = () => controller.setProjectionLevel(Number(sel.value));
    projBox.appendChild(sel);
    projBox.appendChild(
      el('span', 'proj-word', ` records: ${state.projectionWord || '∅'}`),
    );

    errorBox.textContent = state.error;
  }
}
