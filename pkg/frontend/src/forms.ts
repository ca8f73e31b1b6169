// Entry forms for the two item kinds. Variables use a chip input; types and
// formats are fixed checkbox sets, sharing a fixed radio set, so unknown
// tokens are impossible by construction. Server-side {field, reason} errors
// render inline next to the offending field.

import { ApiError, type Api } from "./api.js";
import type { FieldError, ItemDocument, Kind } from "./types.js";
import { DATA_FORMATS, DATA_TYPES, SHARING_CONDITIONS } from "./types.js";

export interface RequestFields {
  name: string;
  variables: string[];
  purpose: string;
}

export interface JacketFields {
  name: string;
  variables: string[];
  outline: string;
  types: string[];
  formats: string[];
  sharing: string | null;
}

// Mirrors the server's required-field rules so obvious mistakes are caught
// before the round-trip; the server remains the authority.
export function validateRequiredFields(fields: {
  name: string;
  variables: string[];
}): FieldError[] {
  const errors: FieldError[] = [];
  if (!fields.name.trim()) {
    errors.push({ field: "name", reason: "MissingName" });
  }
  if (fields.variables.filter((v) => v.trim()).length === 0) {
    errors.push({ field: "variables", reason: "MissingVariables" });
  }
  return errors;
}

export function requestDocument(fields: RequestFields): Partial<ItemDocument> {
  const doc: Partial<ItemDocument> = {
    kind: "request",
    name: fields.name,
    variables: fields.variables,
  };
  if (fields.purpose.trim()) doc.purpose = fields.purpose;
  return doc;
}

export function jacketDocument(fields: JacketFields): Partial<ItemDocument> {
  const doc: Partial<ItemDocument> = {
    kind: "providable",
    name: fields.name,
    variables: fields.variables,
  };
  if (fields.outline.trim()) doc.outline = fields.outline;
  if (fields.types.length) doc.types = fields.types;
  if (fields.formats.length) doc.formats = fields.formats;
  if (fields.sharing) doc.sharing = fields.sharing;
  return doc;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

class ChipInput {
  readonly root: HTMLElement;
  private readonly chips: string[] = [];
  private readonly list: HTMLElement;
  private readonly input: HTMLInputElement;

  constructor(placeholder: string) {
    this.root = el("div", "chip-input");
    this.list = el("div", "chips");
    this.input = el("input");
    this.input.placeholder = placeholder;
    this.input.addEventListener("keydown", (event) => {
      if (event.key === "Enter" || event.key === ",") {
        event.preventDefault();
        this.addFromInput();
      } else if (event.key === "Backspace" && !this.input.value && this.chips.length) {
        this.removeAt(this.chips.length - 1);
      }
    });
    this.input.addEventListener("blur", () => this.addFromInput());
    this.root.append(this.list, this.input);
  }

  private addFromInput(): void {
    const value = this.input.value.trim();
    if (value) {
      this.chips.push(value);
      this.input.value = "";
      this.render();
    }
  }

  private removeAt(index: number): void {
    this.chips.splice(index, 1);
    this.render();
  }

  private render(): void {
    this.list.replaceChildren(
      ...this.chips.map((chip, index) => {
        const node = el("span", "chip", chip);
        const remove = el("button", "chip-remove", "×");
        remove.type = "button";
        remove.addEventListener("click", () => this.removeAt(index));
        node.append(remove);
        return node;
      }),
    );
  }

  values(): string[] {
    this.addFromInput();
    return [...this.chips];
  }

  clear(): void {
    this.chips.length = 0;
    this.input.value = "";
    this.render();
  }
}

interface FieldRow {
  wrapper: HTMLElement;
  error: HTMLElement;
}

function fieldRow(label: string, control: HTMLElement, required = false): FieldRow {
  const wrapper = el("label", "field");
  wrapper.append(el("span", "field-label", required ? `${label} *` : label));
  wrapper.append(control);
  const error = el("span", "field-error");
  wrapper.append(error);
  return { wrapper, error };
}

function checkboxGroup(tokens: readonly string[], name: string): HTMLElement {
  const group = el("div", "token-group");
  for (const token of tokens) {
    const label = el("label", "token");
    const box = el("input");
    box.type = "checkbox";
    box.name = name;
    box.value = token;
    label.append(box, document.createTextNode(token));
    group.append(label);
  }
  return group;
}

function radioGroup(tokens: readonly string[], name: string): HTMLElement {
  const group = el("div", "token-group");
  for (const token of tokens) {
    const label = el("label", "token");
    const radio = el("input");
    radio.type = "radio";
    radio.name = name;
    radio.value = token;
    label.append(radio, document.createTextNode(token));
    group.append(label);
  }
  return group;
}

function checkedValues(root: HTMLElement, name: string): string[] {
  return [...root.querySelectorAll<HTMLInputElement>(`input[name="${name}"]:checked`)].map(
    (input) => input.value,
  );
}

export class EntryForms {
  readonly root: HTMLElement;

  constructor(
    private readonly api: Api,
    kind: Kind,
  ) {
    this.root = el("form", "entry-form");
    this.root.addEventListener("submit", (event) => event.preventDefault());
    if (kind === "request") this.buildRequestForm();
    else this.buildJacketForm();
  }

  private showErrors(rows: Map<string, FieldRow>, errors: FieldError[]): void {
    for (const row of rows.values()) row.error.textContent = "";
    for (const error of errors) {
      const row = rows.get(error.field);
      if (row) row.error.textContent = error.reason;
    }
  }

  private buildRequestForm(): void {
    const name = el("input");
    const variables = new ChipInput("add a variable, press Enter");
    const purpose = el("textarea");
    purpose.rows = 3;

    const rows = new Map<string, FieldRow>([
      ["name", fieldRow("data name", name, true)],
      ["variables", fieldRow("variables", variables.root, true)],
      ["purpose", fieldRow("purpose of data use", purpose)],
    ]);
    const submit = el("button", "submit", "register data request");
    submit.type = "submit";
    const status = el("p", "form-status");

    this.root.append(...[...rows.values()].map((r) => r.wrapper), submit, status);
    this.root.addEventListener("submit", async () => {
      const fields: RequestFields = {
        name: name.value,
        variables: variables.values(),
        purpose: purpose.value,
      };
      const clientErrors = validateRequiredFields(fields);
      this.showErrors(rows, clientErrors);
      if (clientErrors.length) return;
      try {
        await this.api.createItem(requestDocument(fields));
        name.value = "";
        purpose.value = "";
        variables.clear();
        status.textContent = "registered";
      } catch (error) {
        if (error instanceof ApiError) this.showErrors(rows, error.errors);
        else status.textContent = String(error);
      }
    });
  }

  private buildJacketForm(): void {
    const name = el("input");
    const variables = new ChipInput("add a variable, press Enter");
    const outline = el("textarea");
    outline.rows = 3;
    const types = checkboxGroup(DATA_TYPES, "types");
    const formats = checkboxGroup(DATA_FORMATS, "formats");
    const sharing = radioGroup(SHARING_CONDITIONS, "sharing");

    const rows = new Map<string, FieldRow>([
      ["name", fieldRow("data name", name, true)],
      ["variables", fieldRow("variables", variables.root, true)],
      ["outline", fieldRow("data outline", outline)],
      ["types", fieldRow("data types", types)],
      ["formats", fieldRow("data formats", formats)],
      ["sharing", fieldRow("sharing condition", sharing)],
    ]);
    const submit = el("button", "submit", "register providable data");
    submit.type = "submit";
    const status = el("p", "form-status");

    this.root.append(...[...rows.values()].map((r) => r.wrapper), submit, status);
    this.root.addEventListener("submit", async () => {
      const fields: JacketFields = {
        name: name.value,
        variables: variables.values(),
        outline: outline.value,
        types: checkedValues(this.root, "types"),
        formats: checkedValues(this.root, "formats"),
        sharing: checkedValues(this.root, "sharing")[0] ?? null,
      };
      const clientErrors = validateRequiredFields(fields);
      this.showErrors(rows, clientErrors);
      if (clientErrors.length) return;
      try {
        await this.api.createItem(jacketDocument(fields));
        name.value = "";
        outline.value = "";
        variables.clear();
        this.root
          .querySelectorAll<HTMLInputElement>("input[type=checkbox],input[type=radio]")
          .forEach((input) => (input.checked = false));
        status.textContent = "registered";
      } catch (error) {
        if (error instanceof ApiError) this.showErrors(rows, error.errors);
        else status.textContent = String(error);
      }
    });
  }
}
