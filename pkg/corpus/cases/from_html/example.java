public class Example {
    CharSequence render(String html) {
        CharSequence out;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            out = Html.fromHtml(html, 0);
        } else {
            out = Html.fromHtml(html);
        }
        return out;
    }
}
