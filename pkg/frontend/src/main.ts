import { ApiClient } from "./api.js";
import { initApp } from "./app.js";
import { SpeechReader } from "./speech.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}
initApp(root, new ApiClient(), new SpeechReader());
