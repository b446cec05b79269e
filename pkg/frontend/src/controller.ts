// Session controller: owns the view state, talks to the service, and
// reconciles the optimistic ticker against the server's recorded word.

import { GameApi, MoveOption, SessionOut } from './api.js';
import {
  BoardView,
  OptionView,
  TickerEntry,
  optionViews,
  renderBoard,
  tickerEntry,
  tickerWord,
} from './model.js';

export interface ViewState {
  sessionId: string;
  disks: number;
  board: BoardView;
  options: OptionView[];
  ticker: TickerEntry[];
  projectionLevel: number; // number of observed disks
  projectionWord: string;
  error: string;
}

export type Listener = (state: ViewState) => void;

export class GameController {
  state: ViewState = {
    sessionId: '',
    disks: 0,
    board: renderBoard(null),
    options: [],
    ticker: [],
    projectionLevel: 2,
    projectionWord: '',
    error: '',
  };

  private listeners: Listener[] = [];

  constructor(private api: GameApi) {}

  onChange(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  async newGame(disks: number): Promise<void> {
    const session = await this.api.createSession(disks);
    this.state = {
      ...this.state,
      sessionId: session.id,
      disks: session.disks,
      ticker: [],
      projectionLevel: session.disks,
      projectionWord: '',
      error: '',
    };
    await this.refresh(session);
  }

  private async refresh(session?: SessionOut): Promise<void> {
    const s = session ?? (await this.api.getSession(this.state.sessionId));
    const options = await this.api.getMoves(this.state.sessionId);
    this.state = {
      ...this.state,
      board: renderBoard(s.state),
      options: optionViews(options),
      error: '',
    };
    await this.verifyTicker();
    await this.updateProjection();
    this.emit();
  }

  /** The ticker must always equal the server's recorded word. */
  async verifyTicker(): Promise<void> {
    const server = await this.api.getWord(this.state.sessionId);
    if (tickerWord(this.state.ticker) !== server.word) {
      this.state = {
        ...this.state,
        ticker: server.word.split('').map(tickerEntry),
      };
    }
  }

  async submitMove(option: OptionView | string): Promise<void> {
    const letter = typeof option === 'string' ? option : option.letter;
    try {
      const session = await this.api.applyMove(this.state.sessionId, letter);
      this.state = {
        ...this.state,
        ticker: [...this.state.ticker, tickerEntry(letter)],
      };
      await this.refresh(session);
    } catch (e) {
      this.state = { ...this.state, error: String(e) };
      this.emit();
    }
  }

  async undo(): Promise<void> {
    try {
      const session = await this.api.undo(this.state.sessionId);
      this.state = { ...this.state, ticker: this.state.ticker.slice(0, -1) };
      await this.refresh(session);
    } catch (e) {
      this.state = { ...this.state, error: String(e) };
      this.emit();
    }
  }

  async setProjectionLevel(m: number): Promise<void> {
    this.state = { ...this.state, projectionLevel: m };
    await this.updateProjection();
    this.emit();
  }

  private async updateProjection(): Promise<void> {
    if (this.state.disks < 2) {
      // a one-disk game has nothing to ignore
      this.state = {
        ...this.state,
        projectionLevel: this.state.disks,
        projectionWord: tickerWord(this.state.ticker),
      };
      return;
    }
    const m = Math.min(Math.max(this.state.projectionLevel, 2), this.state.disks);
    const out = await this.api.getProjection(this.state.sessionId, m);
    this.state = { ...this.state, projectionLevel: m, projectionWord: out.word };
  }
}
