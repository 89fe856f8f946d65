import init, { reduce, translate, equal } from "./pkg/lmu_web.js";

const $ = (id) => document.getElementById(id);
const checked = (name) => document.querySelector(`input[name=${name}]:checked`).value;

function show(el, json, render) {
  const v = JSON.parse(json);
  el.classList.toggle("error", "error" in v);
  el.textContent = "error" in v ? v.error : render(v);
}

function renderTrace(v) {
  const lines = v.steps.map((s) => `${s.k}\t${s.rule}\t${s.position}\t${s.term}`);
  lines.push(v.exhausted ? `(budget exhausted) ${v.final}` : `normal form: ${v.final}`);
  return lines.join("\n");
}

await init();

$("reduce-go").onclick = () =>
  show($("reduce-out"), reduce($("reduce-src").value, checked("reduce-calc"), Number($("reduce-steps").value)), renderTrace);

$("to-scl").onclick = () => show($("translate-out"), translate($("translate-src").value, "to-scl"), (v) => v.result);
$("to-lm").onclick = () => show($("translate-out"), translate($("translate-src").value, "to-lm"), (v) => v.result);

$("eq-go").onclick = () =>
  show($("eq-out"), equal($("eq-left").value, $("eq-right").value, checked("eq-calc"), 10000), (v) =>
    v.normal_forms ? `${v.verdict}\n${v.normal_forms[0]}\n${v.normal_forms[1]}` : v.verdict);
