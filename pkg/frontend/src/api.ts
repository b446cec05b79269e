// Thin typed client for the game service. All rules live server-side.

export interface StateOut {
  stage: string;
  pegs: number[];
  faces: string;
  hand: number;
  all_off: boolean;
}

export interface SessionOut {
  id: string;
  disks: number;
  state: StateOut;
  word: string;
  moves: number;
  created: string;
  updated: string;
}

export interface MoveOption {
  letter: string;
  label: string; // 'x' or 'y'
  sign: number; // +1 advances, -1 regresses
  leading_disk: number;
  advances: boolean;
  state: StateOut;
}

export interface WordOut {
  word: string;
  length: number;
}

export interface ProjectionOut {
  to_disks: number;
  word: string;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = await res.json();
      if (body && body.detail) detail = String(body.detail);
    } catch {
      // keep statusText
    }
    throw new ApiError(res.status, detail);
  }
  return res.json() as Promise<T>;
}

export class GameApi {
  constructor(private baseUrl: string) {}

  createSession(disks: number): Promise<SessionOut> {
    return request(`${this.baseUrl}/sessions`, {
      method: 'POST',
      body: JSON.stringify({ disks }),
    });
  }

  getSession(id: string): Promise<SessionOut> {
    return request(`${this.baseUrl}/sessions/${id}`);
  }

  getMoves(id: string): Promise<MoveOption[]> {
    return request(`${this.baseUrl}/sessions/${id}/moves`);
  }

  applyMove(id: string, letter: string): Promise<SessionOut> {
    return request(`${this.baseUrl}/sessions/${id}/moves`, {
      method: 'POST',
      body: JSON.stringify({ letter }),
    });
  }

  undo(id: string): Promise<SessionOut> {
    return request(`${this.baseUrl}/sessions/${id}/undo`, { method: 'POST' });
  }

  getWord(id: string): Promise<WordOut> {
    return request(`${this.baseUrl}/sessions/${id}/word`);
  }

  getProjection(id: string, to: number): Promise<ProjectionOut> {
    return request(`${this.baseUrl}/sessions/${id}/projection?to=${to}`);
  }
}
