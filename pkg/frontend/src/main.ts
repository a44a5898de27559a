/**
 * Bootstrap: build the page, load the workspace, run the first
 * compose.  Exported as a function so tests can mount the app against any
 * API base.
 */

import { Client } from "./api.js";
import {
  buildEvaluationInputs,
  buildSkeleton,
  renderAll,
  wireStaticHandlers,
} from "./render.js";
import { PlaygroundStore } from "./state.js";

export async function mountApp(root: HTMLElement, client: Client): Promise<PlaygroundStore> {
  const store = new PlaygroundStore(client);
  buildSkeleton(root);
  wireStaticHandlers(store);
  store.subscribe((state) => renderAll(state, store));
  await store.init();
  buildEvaluationInputs(store);
  renderAll(store.state, store);
  await store.composeNow();
  return store;
}

declare global {
  interface Window {
    playground?: PlaygroundStore;
  }
}

if (typeof window !== "undefined" && document.getElementById("app")) {
  void mountApp(document.getElementById("app") as HTMLElement, new Client()).then(
    (store) => {
      window.playground = store;
    },
  );
}
