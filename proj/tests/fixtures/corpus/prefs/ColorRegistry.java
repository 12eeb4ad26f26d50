package org.eclipse.ui.internal.prefs;

/**
 * Holds the colors chosen on the syntax coloring preference page.
 */
public class ColorRegistry {
    private final Map<String, RGB> colors = new HashMap<>();
    private PreferenceStore store;

    public Color get(String colorKey) {
        RGB rgb = colors.get(colorKey);
        if (rgb == null) {
            rgb = StringConverter.asRGB(store.getString(colorKey));
            colors.put(colorKey, rgb);
        }
        return ColorCache.get(rgb);
    }

    public void put(String colorKey, RGB rgb) {
        colors.put(colorKey, rgb);
        store.setValue(colorKey, StringConverter.asString(rgb));
    }
}
