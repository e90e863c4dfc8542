import init, * as fs from "./pkg/fusion_web.js";

const $ = (id) => document.getElementById(id);
let corpus = [];
let picked = null;

function option(value, text) {
  const o = document.createElement("option");
  o.value = value;
  o.textContent = text;
  return o;
}

function fail(target, e) {
  target.innerHTML = "";
  const span = document.createElement("span");
  span.className = "error";
  span.textContent = String(e);
  target.appendChild(span);
}

function current() {
  return [$("group").value, Number($("prime").value)];
}

function fillPrimes() {
  const entry = corpus.find((e) => e.key === $("group").value);
  $("prime").replaceChildren(...entry.primes.map((p) => option(p, p)));
}

function classify() {
  const [key, p] = current();
  let data;
  try {
    data = JSON.parse(fs.classify(key, p));
  } catch (e) {
    fail($("summary"), e);
    return;
  }
  $("summary").textContent = `${data.summary}; saturated: ${data.saturated}`;
  const flag = (b) => (b ? "yes" : "");
  const head = "<tr><th>subgroup</th><th>order</th><th>|Aut_F|</th><th>fully normalized</th>" +
    "<th>fully centralized</th><th>centric</th><th>radical</th></tr>";
  const table = $("subgroups");
  table.innerHTML = head;
  for (const s of data.subgroups) {
    const tr = document.createElement("tr");
    if (s.alperin) tr.className = "alperin";
    for (const v of [s.label, s.order, s.auts, flag(s.fully_normalized), flag(s.fully_centralized), flag(s.centric), flag(s.radical)]) {
      const td = document.createElement("td");
      td.textContent = v;
      tr.appendChild(td);
    }
    tr.onclick = () => pick(s.id, tr);
    table.appendChild(tr);
  }
  $("normal").replaceChildren(...data.normals.map((n, i) => option(i, `${n.label}`)));
  $("morphism").replaceChildren();
  $("factorization").textContent = "";
  $("centralizer").textContent = "";
}

function pick(id, row) {
  const [key, p] = current();
  document.querySelectorAll("tr.picked").forEach((r) => r.classList.remove("picked"));
  row.classList.add("picked");
  picked = id;
  const list = JSON.parse(fs.morphisms(key, p, id));
  $("morphism").replaceChildren(...list.map((m, i) => option(i, m === "[]" ? "identity" : m)));
}

function factor() {
  if (picked === null) return;
  const [key, p] = current();
  try {
    const r = JSON.parse(fs.alperin(key, p, picked, Number($("morphism").value)));
    const lines = [`morphism ${r.morphism}`];
    if (r.steps.length === 0) lines.push("identity: no steps");
    r.steps.forEach((s, i) => {
      lines.push(`${i + 1}. automorphism ${s.automorphism}`, `   of ${s.member}`, `   carries ${s.from} to ${s.to}`);
    });
    lines.push(`composite equals the morphism: ${r.recomposes}`);
    $("factorization").textContent = lines.join("\n");
  } catch (e) {
    fail($("factorization"), e);
  }
}

function centralize() {
  const [key, p] = current();
  try {
    const r = JSON.parse(fs.centralizer(key, p, Number($("normal").value)));
    $("centralizer").textContent = [
      `subsystem ${r.subsystem} on ${r.support}`,
      `subgroups centralizing it: ${r.centralized.join("; ")}`,
      `C_S(E) = ${r.c_s_e}`,
      `R* = ${r.r_star}`,
      `model order ${r.model_order}, normal model order ${r.normal_model_order}`,
      `C_F(E): ${r.c_f_e}, saturated: ${r.c_f_e_saturated}`,
    ].join("\n");
  } catch (e) {
    fail($("centralizer"), e);
  }
}

await init();
corpus = JSON.parse(fs.corpus());
$("group").replaceChildren(...corpus.map((e) => option(e.key, e.name)));
$("group").value = "s4";
fillPrimes();
$("group").onchange = fillPrimes;
$("go").onclick = classify;
$("factor").onclick = factor;
$("centralize").onclick = centralize;
classify();
