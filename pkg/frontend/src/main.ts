import { GameApi } from './api.js';
import { GameController } from './controller.js';
import { mount } from './dom.js';

const params = new URLSearchParams(window.location.search);
const base = params.get('api') ?? 'http://127.0.0.1:8642';

const controller = new GameController(new GameApi(base));
mount(document.getElementById('app')!, controller);
controller.newGame(3);
