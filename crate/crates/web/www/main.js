import init, { analyze, character_table, lemma24_table, builtin_names } from "./pkg/ocgroup_web.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("err");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e.message ?? e);
  }
}

function source() {
  const text = $("file").value.trim();
  return text.length ? text : $("builtin").value;
}

function summary(r) {
  const lines = [
    `${r.label}: order ${r.order}, ${r.class_count} classes`,
    `rational ${r.rational}, OC ${r.oc}, odd-order conjugate ${r.odd_order_conjugate}`,
  ];
  return lines.join("\n") + "\n\n" + JSON.stringify(r, null, 2);
}

await init();

for (const name of builtin_names().split(" ")) {
  const opt = document.createElement("option");
  opt.value = opt.textContent = name;
  $("builtin").append(opt);
}

$("analyze").onclick = () => show($("group-out"), () => summary(JSON.parse(analyze(source()))));

$("chartab").onclick = () =>
  show($("group-out"), () => {
    const t = JSON.parse(character_table(source()));
    return `${t.text}\n${t.rational_characters} rational characters, ${t.rational_classes} rational classes`;
  });

$("pairs").onclick = () =>
  show($("pairs-out"), () => {
    const v = JSON.parse(lemma24_table(Number($("qmax").value), Number($("rmax").value)));
    const rows = Object.entries(v.table).map(([q, rs]) => `q = ${q}: r in {${rs.join(", ")}}`);
    return rows.join("\n") + `\n\n${v.pairs} pairs`;
  });
